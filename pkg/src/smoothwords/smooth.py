"""Smoothness testing, heights, and left-extension analysis.

A word is smooth when iterating the padded derivative eventually reaches the
empty word.  Heights iterate the plain derivative instead; for ``b = a + 1``
the two chains coincide, otherwise they can differ and both are exposed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .operators import DerivativeFailure, derivative, rho
from .words import Word


class NotSmoothError(ValueError):
    """Raised when an operation defined only on smooth words gets a non-smooth one."""


@dataclass
class SmoothCache:
    """Memo store keyed by canonical words.

    Entries are immutable once written; a bounded size keeps the hot short
    words (which dominate repeat queries) without letting large enumerations
    exhaust memory.
    """

    max_entries: int = 1_000_000
    smooth: dict[Word, bool] = field(default_factory=dict)
    heights: dict[Word, int] = field(default_factory=dict)

    def _room(self) -> bool:
        return len(self.smooth) + len(self.heights) < self.max_entries


def is_smooth(w: Word, cache: SmoothCache | None = None) -> bool:
    """True when the padded-derivative chain of ``w`` reaches the empty word."""
    chain: list[Word] = []
    cur = w
    stalls = 0
    verdict: bool | None = None
    while True:
        if cur.is_empty:
            verdict = True
            break
        if cache is not None:
            hit = cache.smooth.get(cur)
            if hit is not None:
                verdict = hit
                break
        chain.append(cur)
        nxt = rho(cur)
        if not nxt.ok:
            verdict = False
            break
        # |rho(w)| < |w| holds for every nonempty admissible word; a stall
        # therefore signals an implementation bug, not a hard input.
        if len(nxt.word) >= len(cur):
            stalls += 1
            if stalls > 2 * w.alphabet.b:
                raise RuntimeError("padded-derivative chain stopped shrinking")
        else:
            stalls = 0
        cur = nxt.word
    if cache is not None and cache._room():
        for entry in chain:
            cache.smooth.setdefault(entry, verdict)
    return verdict


def rho_chain(w: Word) -> tuple[list[Word], DerivativeFailure | None]:
    """Padded-derivative chain from ``w`` down to the empty word or the failure point.

    Returns the visited words (starting with ``w``) and ``None`` when the chain
    reached the empty word, else the failure reason.
    """
    chain = [w]
    cur = w
    while not cur.is_empty:
        nxt = rho(cur)
        if not nxt.ok:
            return chain, nxt.reason
        cur = nxt.word
        chain.append(cur)
    return chain, None


def derivative_chain(w: Word) -> tuple[list[Word], DerivativeFailure | None]:
    """Plain-derivative chain from ``w``; same contract as :func:`rho_chain`."""
    chain = [w]
    cur = w
    while not cur.is_empty:
        nxt = derivative(cur)
        if not nxt.ok:
            return chain, nxt.reason
        cur = nxt.word
        chain.append(cur)
    return chain, None


def height(w: Word, cache: SmoothCache | None = None) -> int:
    """Smallest ``k`` such that the (k+1)-th plain derivative of ``w`` is empty."""
    if w.is_empty:
        raise ValueError("height undefined for the empty word")
    if cache is not None:
        hit = cache.heights.get(w)
        if hit is not None:
            return hit
    if not is_smooth(w, cache):
        raise NotSmoothError(f"height undefined for non-smooth word {w!r}")
    k = -1
    cur = w
    while not cur.is_empty:
        cur = derivative(cur).unwrap()
        k += 1
    if cache is not None and cache._room():
        cache.heights.setdefault(w, k)
    return k


def left_extensions(w: Word, cache: SmoothCache | None = None) -> set[int]:
    """Letters ``x`` such that ``x + w`` is smooth; nonempty for every smooth ``w``."""
    if not is_smooth(w, cache):
        raise NotSmoothError(f"left_extensions undefined for non-smooth word {w!r}")
    return {x for x in w.alphabet.letters if is_smooth(w.prepend(x), cache)}


def is_lfe(w: Word, cache: SmoothCache | None = None) -> bool:
    """True when both one-letter left extensions of ``w`` are smooth."""
    a, b = w.alphabet.letters
    return is_smooth(w.prepend(a), cache) and is_smooth(w.prepend(b), cache)
