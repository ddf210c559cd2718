"""Two-letter integer alphabets and run-length encoded words.

A word over an alphabet ``{a, b}`` (``1 <= a < b``) is stored canonically as
its sequence of maximal runs ``(letter, length)``.  Every operator in this
package reads or rewrites run lengths, so the RLE form is the working
representation; flat letter sequences are materialized on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Run = tuple[int, int]  # (letter, length)


@dataclass(frozen=True)
class Alphabet:
    """Ordered pair of positive integer letters with ``a < b``."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if not isinstance(self.a, int) or not isinstance(self.b, int):
            raise TypeError(f"alphabet letters must be integers, got {self.a!r}, {self.b!r}")
        if self.a < 1 or self.b <= self.a:
            raise ValueError(f"alphabet requires 1 <= a < b, got a={self.a}, b={self.b}")

    @property
    def is_even(self) -> bool:
        return self.a % 2 == 0 and self.b % 2 == 0

    @property
    def letters(self) -> tuple[int, int]:
        return (self.a, self.b)

    def check_letter(self, x: int) -> int:
        if x != self.a and x != self.b:
            raise ValueError(f"letter {x!r} is not in alphabet {{{self.a},{self.b}}}")
        return x

    def complement_letter(self, x: int) -> int:
        self.check_letter(x)
        return self.b if x == self.a else self.a

    @classmethod
    def parse(cls, text: str) -> "Alphabet":
        """Parse ``"a,b"`` (e.g. ``"1,2"``)."""
        parts = text.split(",")
        if len(parts) != 2:
            raise ValueError(f"expected 'a,b', got {text!r}")
        try:
            a, b = (int(p.strip()) for p in parts)
        except ValueError as exc:
            raise ValueError(f"expected integer letters in {text!r}") from exc
        return cls(a, b)

    def __str__(self) -> str:
        return f"{self.a},{self.b}"


@dataclass(frozen=True)
class RunProfile:
    """Run statistics of a nonempty word: run count and boundary runs."""

    r: int
    fr_letter: int
    lr_letter: int
    lfr: int
    llr: int


def _runs_from_letters(alphabet: Alphabet, letters: Iterable[int]) -> tuple[Run, ...]:
    runs: list[list[int]] = []
    for x in letters:
        alphabet.check_letter(x)
        if runs and runs[-1][0] == x:
            runs[-1][1] += 1
        else:
            runs.append([x, 1])
    return tuple((l, n) for l, n in runs)


class Word:
    """Immutable word over a two-letter alphabet, canonically run-length encoded.

    Equality and hashing use the alphabet plus the run list, which is unique
    per letter sequence, so words work directly as cache and set keys.
    """

    __slots__ = ("alphabet", "runs", "_length", "_hash")

    def __init__(self, alphabet: Alphabet, runs: tuple[Run, ...] = (), *, _validated: bool = False):
        if not _validated:
            runs = tuple((int(l), int(n)) for l, n in runs)
            prev = None
            for letter, length in runs:
                alphabet.check_letter(letter)
                if length < 1:
                    raise ValueError(f"run length must be positive, got {length}")
                if letter == prev:
                    raise ValueError("adjacent runs must have distinct letters")
                prev = letter
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "runs", runs)
        object.__setattr__(self, "_length", sum(n for _, n in runs))
        object.__setattr__(self, "_hash", hash((alphabet, runs)))

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("Word is immutable")

    @classmethod
    def from_letters(cls, alphabet: Alphabet, letters: Iterable[int]) -> "Word":
        return cls(alphabet, _runs_from_letters(alphabet, letters), _validated=True)

    @classmethod
    def empty(cls, alphabet: Alphabet) -> "Word":
        return cls(alphabet, (), _validated=True)

    # -- basic accessors ---------------------------------------------------

    def __len__(self) -> int:
        return self._length

    @property
    def is_empty(self) -> bool:
        return self._length == 0

    def letters(self) -> tuple[int, ...]:
        out: list[int] = []
        for letter, length in self.runs:
            out.extend([letter] * length)
        return tuple(out)

    def count(self, letter: int) -> int:
        self.alphabet.check_letter(letter)
        return sum(n for l, n in self.runs if l == letter)

    def ratio(self, letter: int) -> Fraction:
        """Frequency ``count(letter) / len`` of a nonempty word, exact."""
        if self.is_empty:
            raise ValueError("ratio undefined for the empty word")
        return Fraction(self.count(letter), self._length)

    def profile(self) -> RunProfile:
        if not self.runs:
            raise ValueError("profile undefined for the empty word")
        fr_letter, lfr = self.runs[0]
        lr_letter, llr = self.runs[-1]
        return RunProfile(r=len(self.runs), fr_letter=fr_letter, lr_letter=lr_letter, lfr=lfr, llr=llr)

    # -- symmetries --------------------------------------------------------

    def complement(self) -> "Word":
        comp = self.alphabet.complement_letter
        return Word(self.alphabet, tuple((comp(l), n) for l, n in self.runs), _validated=True)

    def reversal(self) -> "Word":
        return Word(self.alphabet, tuple(reversed(self.runs)), _validated=True)

    # -- composition helpers -----------------------------------------------

    def prepend(self, letter: int, times: int = 1) -> "Word":
        """New word ``letter^times`` + ``self`` (merging runs as needed)."""
        self.alphabet.check_letter(letter)
        if times < 1:
            return self
        if self.runs and self.runs[0][0] == letter:
            head = ((letter, self.runs[0][1] + times),)
            return Word(self.alphabet, head + self.runs[1:], _validated=True)
        return Word(self.alphabet, ((letter, times),) + self.runs, _validated=True)

    def append(self, letter: int, times: int = 1) -> "Word":
        self.alphabet.check_letter(letter)
        if times < 1:
            return self
        if self.runs and self.runs[-1][0] == letter:
            tail = ((letter, self.runs[-1][1] + times),)
            return Word(self.alphabet, self.runs[:-1] + tail, _validated=True)
        return Word(self.alphabet, self.runs + ((letter, times),), _validated=True)

    def concat(self, other: "Word") -> "Word":
        if self.alphabet != other.alphabet:
            raise ValueError("cannot concatenate words over different alphabets")
        if not other.runs:
            return self
        if not self.runs:
            return other
        if self.runs[-1][0] == other.runs[0][0]:
            mid = ((self.runs[-1][0], self.runs[-1][1] + other.runs[0][1]),)
            return Word(self.alphabet, self.runs[:-1] + mid + other.runs[1:], _validated=True)
        return Word(self.alphabet, self.runs + other.runs, _validated=True)

    def is_factor_of(self, other: "Word") -> bool:
        """Substring containment on letter sequences."""
        if self.alphabet != other.alphabet:
            return False
        if self.is_empty:
            return True
        return _sub(self.letters(), other.letters())

    # -- text / JSON / bytes forms ------------------------------------------

    def to_text(self) -> str:
        """Compact digit string when both letters are single digits, else comma-separated."""
        seq = self.letters()
        if self.alphabet.b <= 9:
            return "".join(str(x) for x in seq)
        return ",".join(str(x) for x in seq)

    @classmethod
    def parse(cls, alphabet: Alphabet, text: str) -> "Word":
        text = text.strip()
        if not text:
            return cls.empty(alphabet)
        if "," in text:
            letters = [int(p) for p in text.split(",") if p.strip()]
        else:
            if alphabet.b > 9:
                raise ValueError("compact digit form only supports single-digit letters; use commas")
            letters = [int(ch) for ch in text]
        return cls.from_letters(alphabet, letters)

    def to_json_dict(self) -> dict:
        return {"alphabet": [self.alphabet.a, self.alphabet.b], "runs": [[l, n] for l, n in self.runs]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Word":
        alphabet = Alphabet(*data["alphabet"])
        return cls(alphabet, tuple((l, n) for l, n in data["runs"]))

    def to_bytes(self) -> bytes:
        """Letter sequence as raw bytes; requires letters <= 255."""
        if self.alphabet.b > 255:
            raise ValueError("bytes form requires letters <= 255")
        return bytes(self.letters())

    @classmethod
    def from_bytes(cls, alphabet: Alphabet, data: bytes) -> "Word":
        return cls.from_letters(alphabet, data)

    # -- protocol ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.alphabet == other.alphabet and self.runs == other.runs

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Word") -> bool:
        return self.letters() < other.letters()

    def __repr__(self) -> str:
        return f"Word({self.alphabet}, {self.to_text()!r})"


def _sub(needle: Sequence[int], hay: Sequence[int]) -> bool:
    n, m = len(needle), len(hay)
    if n > m:
        return False
    first = needle[0]
    for i in range(m - n + 1):
        if hay[i] == first and tuple(hay[i : i + n]) == tuple(needle):
            return True
    return False


def make_word(alphabet: Alphabet, letters: Iterable[int]) -> Word:
    """Canonical RLE word from a letter sequence; rejects letters outside the alphabet."""
    return Word.from_letters(alphabet, letters)


def profile(w: Word) -> RunProfile:
    return w.profile()


def complement(w: Word) -> Word:
    return w.complement()


def reversal(w: Word) -> Word:
    return w.reversal()


def count(w: Word, letter: int) -> int:
    return w.count(letter)
