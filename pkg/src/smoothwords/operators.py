"""Run-length operators on words: closure, derivative, their composition, and inverses.

Conventions used throughout (alphabet ``{a, b}``, ``a < b``):

* A word is *admissible* when every run length is at most ``b``.
* The closure pads a boundary run up to length ``b`` exactly when that run is
  longer than ``a`` (a boundary run of length <= a is left alone).  A word with
  a single run is its own first and last run, so it is padded to total length
  ``b`` once, not twice.
* The derivative reads off run lengths, requires interior run lengths to be
  ``a`` or ``b``, and discards a boundary run whose length is below ``b``.  A
  single-run word is discarded once.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import groupby
from typing import Iterable, Sequence

from .words import Alphabet, Word


class DerivativeFailure(enum.Enum):
    RUN_TOO_LONG = "run_too_long"
    INTERIOR_RUN_NOT_IN_ALPHABET = "interior_run_not_in_alphabet"


class NotDifferentiableError(ValueError):
    """Raised when a word outside the operator's domain is forced through it."""


@dataclass(frozen=True)
class DerivativeOutcome:
    """Result of the derivative: a word, or a structured failure reason."""

    word: Word | None
    reason: DerivativeFailure | None = None

    @property
    def ok(self) -> bool:
        return self.word is not None

    def unwrap(self) -> Word:
        if self.word is None:
            raise NotDifferentiableError(f"word is not differentiable: {self.reason.value}")
        return self.word


def closure(w: Word) -> Word:
    """Pad boundary runs longer than ``a`` up to length ``b``.

    Rejects words that are not admissible (some run longer than ``b``).
    """
    alphabet = w.alphabet
    a, b = alphabet.a, alphabet.b
    if any(n > b for _, n in w.runs):
        raise NotDifferentiableError(f"closure undefined: some run exceeds b={b}")
    if not w.runs:
        return w
    runs = list(w.runs)
    if runs[0][1] > a:
        runs[0] = (runs[0][0], b)
    if runs[-1][1] > a:
        runs[-1] = (runs[-1][0], b)
    return Word(alphabet, tuple(runs), _validated=True)


def derivative(w: Word) -> DerivativeOutcome:
    """Word of run lengths, discarding boundary runs shorter than ``b``.

    Total: returns a structured failure instead of raising, so enumeration
    pipelines can branch without exception control flow.
    """
    alphabet = w.alphabet
    a, b = alphabet.a, alphabet.b
    runs = w.runs
    if any(n > b for _, n in runs):
        return DerivativeOutcome(None, DerivativeFailure.RUN_TOO_LONG)
    last = len(runs) - 1
    symbols: list[int] = []
    for i, (_, n) in enumerate(runs):
        if i == 0 or i == last:
            if n == b:
                symbols.append(n)
        elif n == a or n == b:
            symbols.append(n)
        else:
            return DerivativeOutcome(None, DerivativeFailure.INTERIOR_RUN_NOT_IN_ALPHABET)
    return DerivativeOutcome(Word.from_letters(alphabet, symbols))


def rho(w: Word) -> DerivativeOutcome:
    """Derivative of the closure; the smoothness-defining operator."""
    a, b = w.alphabet.a, w.alphabet.b
    if any(n > b for _, n in w.runs):
        return DerivativeOutcome(None, DerivativeFailure.RUN_TOO_LONG)
    return derivative(closure(w))


def inverse_derivative(u: Word, start_letter: int) -> Word:
    """Expand symbols of ``u`` into alternating runs starting with ``start_letter``.

    The k-th run has the k-th symbol of ``u`` as its length; letters alternate.
    """
    alphabet = u.alphabet
    alphabet.check_letter(start_letter)
    letter = start_letter
    runs: list[tuple[int, int]] = []
    for length in u.letters():
        runs.append((letter, length))
        letter = alphabet.complement_letter(letter)
    return Word(alphabet, tuple(runs), _validated=True)


def primitives(w: Word) -> set[Word]:
    """All words whose derivative equals ``w``.

    Candidates follow the closed form: an alternating expansion of ``w`` with
    an optional discarded run on each side (lengths below ``b``), filtered by
    re-derivation.  At most ``2*b*b`` words; length spread at most ``2*(b-1)``.
    """
    alphabet = w.alphabet
    a, b = alphabet.a, alphabet.b
    comp = alphabet.complement_letter
    out: set[Word] = set()
    if w.is_empty:
        for alpha in (a, b):
            for i in range(0, b):
                for j in range(0, b):
                    if i + j == 0:
                        continue
                    v = Word.empty(alphabet).append(alpha, i).append(comp(alpha), j)
                    if derivative(v).word == w:
                        out.add(v)
        return out
    for alpha in (a, b):
        core = inverse_derivative(w, alpha)
        gamma = comp(core.runs[-1][0])
        for i in range(0, b):
            for j in range(0, b):
                v = core.prepend(comp(alpha), i).append(gamma, j)
                if derivative(v).word == w:
                    out.add(v)
    return out


def generic_run_length_derivative(letters: Sequence[int], max_letter: int) -> tuple[int, ...]:
    """Run-length readout for arbitrary positive-integer sequences.

    Discards the first/last run when its length is below ``max_letter``; makes
    no interior-run or smoothness claims.  Rejects runs longer than
    ``max_letter`` and non-positive letters.
    """
    if max_letter < 1:
        raise ValueError("max_letter must be positive")
    lengths: list[int] = []
    for letter, grp in groupby(letters):
        if letter < 1:
            raise ValueError(f"letters must be positive, got {letter}")
        n = sum(1 for _ in grp)
        if n > max_letter:
            raise ValueError(f"run of {letter} has length {n} > max_letter {max_letter}")
        lengths.append(n)
    if not lengths:
        return ()
    last = len(lengths) - 1
    out = [n for i, n in enumerate(lengths) if (i != 0 and i != last) or n == max_letter]
    return tuple(out)
