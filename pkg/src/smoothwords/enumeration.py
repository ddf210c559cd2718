"""Breadth-first enumeration of smooth words by length.

Two engines with one contract:

* :func:`naive_frontier` extends words one letter at a time and keeps those the
  definitional smoothness test accepts.  Simple, slow, used as the reference
  and for small horizons.
* :func:`tower_sweep` maintains, for every frontier word, its whole chain of
  padded derivatives as byte strings.  Appending one letter touches only the
  tails of the chain, so each candidate extension costs amortized O(chain
  depth) instead of O(word length).  The two engines are cross-checked against
  each other in the test suite.

Tower invariant: entry ``(W0, t0, W1, t1, ..., Wk, tk)`` stores level words
``Wi`` (letter bytes) with ``ti`` the length of the open last run of ``Wi``;
``W(i+1)`` equals the padded derivative of ``Wi`` at every step.  Level
symbols are append-only: a boundary run contributes ``b`` the moment its
length exceeds ``a`` (padding makes that irrevocable), and an interior run
contributes its final length when it closes, which must then be ``a`` or
``b``.  An entry exists in the frontier if and only if its word is smooth.
"""

from __future__ import annotations

from typing import Callable, Iterator, NamedTuple

from .smooth import SmoothCache, is_smooth
from .words import Alphabet, Word


class ResourceLimitError(RuntimeError):
    """Raised when an enumeration would exceed its configured state budget."""


DEFAULT_MAX_WORDS = 50_000_000


class SweepRecord(NamedTuple):
    word: bytes        # the smooth word itself
    llr: int           # length of its last run
    rho1: bytes        # its padded derivative
    lfe: bool          # both right extensions smooth (reversed word is LFE)


def _check_engine_alphabet(alphabet: Alphabet) -> None:
    if alphabet.b > 255:
        raise ValueError("enumeration engine supports letters up to 255")


def _make_extender(a: int, b: int) -> Callable[[tuple, int], tuple | None]:
    a1 = a + 1
    single = {a: bytes((a,)), b: bytes((b,))}

    def extend(entry: tuple, x: int) -> tuple | None:
        out: list = []
        carry: int | None = x
        i = 0
        n = len(entry)
        while carry is not None:
            if i == n:
                out.append(single[carry])
                out.append(1)
                carry = None
                i += 2
                break
            w = entry[i]
            t = entry[i + 1]
            if w[-1] == carry:
                t += 1
                if t > b:
                    return None
                out.append(w + single[carry])
                out.append(t)
                carry = b if t == a1 else None
            else:
                # closing the open run; interior runs must end at a or b
                if t != len(w):
                    if t == a:
                        emit: int | None = a
                    elif t == b:
                        emit = None
                    else:
                        return None
                else:
                    emit = None
                out.append(w + single[carry])
                out.append(1)
                carry = emit
            i += 2
        if i < n:
            return tuple(out) + entry[i:]
        return tuple(out)

    return extend


def tower_sweep(
    alphabet: Alphabet,
    max_len: int,
    *,
    max_words: int | None = DEFAULT_MAX_WORDS,
) -> Iterator[tuple[int, list[SweepRecord]]]:
    """Yield ``(n, records)`` for each length ``1 <= n <= max_len``.

    ``records`` lists every smooth word of length ``n`` (each with its last-run
    length, padded derivative, and right-extendability flags already resolved).
    """
    _check_engine_alphabet(alphabet)
    if max_len < 1:
        return
    a, b = alphabet.a, alphabet.b
    extend = _make_extender(a, b)
    entries: list[tuple] = [(bytes((a,)), 1), (bytes((b,)), 1)]
    visited = len(entries)
    for n in range(1, max_len + 1):
        records: list[SweepRecord] = []
        nxt: list[tuple] = []
        keep = n < max_len
        for e in entries:
            ca = extend(e, a)
            cb = extend(e, b)
            records.append(
                SweepRecord(e[0], e[1], e[2] if len(e) > 2 else b"", ca is not None and cb is not None)
            )
            if keep:
                if ca is not None:
                    nxt.append(ca)
                if cb is not None:
                    nxt.append(cb)
        yield n, records
        if not keep:
            return
        visited += len(nxt)
        if max_words is not None and visited > max_words:
            raise ResourceLimitError(
                f"enumeration exceeded max_words={max_words} at length {n + 1}"
            )
        entries = nxt


def tower_entry(alphabet: Alphabet, letters: bytes) -> tuple | None:
    """Tower for one word, built by feeding its letters; ``None`` if not smooth."""
    _check_engine_alphabet(alphabet)
    extend = _make_extender(alphabet.a, alphabet.b)
    entry: tuple | None = None
    for x in letters:
        if entry is None:
            entry = (bytes((x,)), 1)
        else:
            entry = extend(entry, x)
            if entry is None:
                return None
    return entry if entry is not None else ()


def is_lfe_fast(alphabet: Alphabet, letters: bytes) -> bool:
    """Tower-based LFE test: both one-letter left extensions are smooth.

    Builds the tower of the reversed word once and probes the two right
    extensions; equivalent to the definitional test (reversal preserves
    smoothness), which the test suite cross-checks.
    """
    a, b = alphabet.a, alphabet.b
    if not letters:
        return True
    rev = letters[::-1]
    entry = tower_entry(alphabet, rev)
    if entry is None:
        return False
    extend = _make_extender(a, b)
    return extend(entry, a) is not None and extend(entry, b) is not None


def first_run_length(word: bytes) -> int:
    first = word[:1]
    return len(word) - len(word.lstrip(first))


def derivative_bytes(word: bytes, llr: int, rho1: bytes, a: int, b: int) -> bytes:
    """Plain derivative of a smooth word, by boundary surgery on its padded derivative.

    The padded derivative keeps a boundary run (as ``b``) whenever its length
    exceeds ``a``; the plain derivative keeps it only at length exactly ``b``.
    """
    lfr = llr if llr == len(word) else first_run_length(word)
    start = 1 if a < lfr < b else 0
    stop = len(rho1) - (1 if a < llr < b else 0)
    return rho1[start:stop] if stop > start else b""


def naive_frontier(
    alphabet: Alphabet,
    max_len: int,
    cache: SmoothCache | None = None,
    *,
    max_words: int | None = DEFAULT_MAX_WORDS,
) -> Iterator[tuple[int, list[Word]]]:
    """Definitional breadth-first enumeration: extend right, keep what is smooth."""
    if max_len < 1:
        return
    if cache is None:
        cache = SmoothCache()
    a, b = alphabet.a, alphabet.b
    frontier = [Word.from_letters(alphabet, (a,)), Word.from_letters(alphabet, (b,))]
    visited = len(frontier)
    for n in range(1, max_len + 1):
        yield n, frontier
        if n == max_len:
            return
        nxt: list[Word] = []
        for w in frontier:
            for x in (a, b):
                c = w.append(x)
                if is_smooth(c, cache):
                    nxt.append(c)
        visited += len(nxt)
        if max_words is not None and visited > max_words:
            raise ResourceLimitError(f"enumeration exceeded max_words={max_words} at length {n + 1}")
        frontier = nxt
