"""Enumeration of fully left-extendable (LFE) words, by height level and by length.

Levels of the preimage tree rooted at the empty word are built two independent
ways:

* :func:`p_level` expands each word of the previous level through the closed
  candidate form (a complement prefix of length ``a``, an alternating
  expansion of the word, and a bounded closing run) and keeps the candidates
  that really are LFE.
* :func:`p_level_oracle` enumerates *all* smooth words up to a sound length
  bound and keeps those whose derivative lands in the previous level and whose
  one-letter left extensions are both smooth.

The two constructions must agree as sets.  :meth:`LfeLevel.expected_size`
gives the closed-form size prediction ``4(b-1)(2b-1)^(j-1)``; enumeration
matches it whenever ``b = a + 1``, while wider alphabets fall short of it from
level 2 on (candidates whose closing run is longer than ``a`` need an extra
smoothness condition there).  The test suite pins both behaviours.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .enumeration import (
    DEFAULT_MAX_WORDS,
    ResourceLimitError,
    derivative_bytes,
    is_lfe_fast,
    tower_entry,
    tower_sweep,
)
from .operators import inverse_derivative
from .smooth import SmoothCache, is_lfe
from .words import Alphabet, Word

DEFAULT_MAX_LEVEL_WORDS = 2_000_000


@dataclass(frozen=True)
class LfeLevel:
    """All LFE words whose derivative chain reaches the empty word in exactly ``j`` steps."""

    alphabet: Alphabet
    j: int
    words: tuple[Word, ...]  # sorted by letter sequence

    def __len__(self) -> int:
        return len(self.words)

    def expected_size(self) -> int:
        """Closed-form size prediction for this level (exact when ``b = a + 1``)."""
        b = self.alphabet.b
        return 4 * (b - 1) * (2 * b - 1) ** (self.j - 1)


@dataclass(frozen=True)
class LfeLengthClass:
    """All LFE words of one length."""

    alphabet: Alphabet
    k: int
    words: tuple[Word, ...]

    def __len__(self) -> int:
        return len(self.words)


def lfe_candidates(w: Word) -> set[Word]:
    """Closed-form candidate preimages of ``w`` under the derivative.

    Every LFE preimage has this shape: the prefix run must have length exactly
    ``a`` (an interior run admits no other length below ``b``), the core is an
    alternating expansion of ``w``, and the closing run has length between 0
    (only when ``w`` ends with ``b``) and ``b - 1``.  Candidates all derive
    back to ``w``; not all of them are LFE.
    """
    alphabet = w.alphabet
    a, b = alphabet.a, alphabet.b
    comp = alphabet.complement_letter
    out: set[Word] = set()
    if w.is_empty:
        for alpha in (a, b):
            for i in range(1, b):
                out.add(Word(alphabet, ((alpha, i),), _validated=True))
            for j in range(1, b):
                out.add(Word(alphabet, ((alpha, a), (comp(alpha), j)), _validated=True))
        return out
    j_start = 0 if w.runs[-1][0] == b else 1
    for beta in (a, b):
        core = inverse_derivative(w, beta)
        gamma = comp(core.runs[-1][0])
        base = core.prepend(comp(beta), a)
        for j in range(j_start, b):
            out.add(base.append(gamma, j))
    return out


def lfe_expand(w: Word, cache: SmoothCache | None = None) -> set[Word]:
    """The LFE preimages of an LFE word ``w`` under the derivative.

    A candidate ``comp(beta)^a + expand(w, beta) + gamma^j`` has left-extension
    images that collapse to ``x' + w`` when ``j <= a`` (the closing run is
    dropped) and to ``x' + w + b`` when ``j > a`` (the closing run gets padded
    and kept), with ``x'`` ranging over both letters.  ``j <= a`` candidates
    are therefore LFE exactly because ``w`` is; ``j > a`` candidates are LFE
    for all of them or none, depending on one extra smoothness condition on
    ``w`` itself.  The test suite checks this expansion word-for-word against
    the unstructured filter (all derivative preimages, tested one by one).
    """
    alphabet = w.alphabet
    a, b = alphabet.a, alphabet.b
    if alphabet.b > 255:
        if not is_lfe(w, cache):
            raise ValueError(f"lfe_expand requires an LFE word, got {w!r}")
        return {v for v in lfe_candidates(w) if is_lfe(v, cache)}
    if not is_lfe_fast(alphabet, w.to_bytes()):
        raise ValueError(f"lfe_expand requires an LFE word, got {w!r}")
    if w.is_empty:
        return {v for v in lfe_candidates(w) if is_lfe_fast(alphabet, v.to_bytes())}

    comp = alphabet.complement_letter
    j_start = 0 if w.runs[-1][0] == b else 1
    long_tail_ok = False
    if b - 1 > a:
        tail = w.append(b)
        long_tail_ok = (
            tower_entry(alphabet, tail.prepend(a).to_bytes()) is not None
            and tower_entry(alphabet, tail.prepend(b).to_bytes()) is not None
        )
    out: set[Word] = set()
    for beta in (a, b):
        core = inverse_derivative(w, beta)
        gamma = comp(core.runs[-1][0])
        base = core.prepend(comp(beta), a)
        j_stop = b if long_tail_ok else min(a, b - 1) + 1
        for j in range(j_start, j_stop):
            out.add(base.append(gamma, j))
    return out


def _level0(alphabet: Alphabet) -> LfeLevel:
    return LfeLevel(alphabet, 0, (Word.empty(alphabet),))


def p_levels(
    alphabet: Alphabet,
    j_max: int,
    *,
    max_level_words: int = DEFAULT_MAX_LEVEL_WORDS,
    cache: SmoothCache | None = None,
) -> list[LfeLevel]:
    """Levels 1..j_max, each expanded from the previous one."""
    if j_max < 1:
        raise ValueError("j_max must be >= 1")
    if cache is None:
        cache = SmoothCache()
    b = alphabet.b
    levels: list[LfeLevel] = []
    current: set[Word] = {Word.empty(alphabet)}
    for j in range(1, j_max + 1):
        bound = len(current) * 2 * b
        if bound > max_level_words:
            raise ResourceLimitError(
                f"level {j} could hold up to {bound} words, over the cap {max_level_words}"
            )
        nxt: set[Word] = set()
        for w in current:
            nxt |= lfe_expand(w, cache)
        levels.append(LfeLevel(alphabet, j, tuple(sorted(nxt))))
        current = nxt
    return levels


def p_level(alphabet: Alphabet, j: int, **kwargs) -> LfeLevel:
    """Level ``j`` of the LFE preimage tree rooted at the empty word."""
    return p_levels(alphabet, j, **kwargs)[-1]


def oracle_length_bound(prev: LfeLevel) -> int:
    """Sound upper bound on the length of any derivative-preimage of ``prev``'s words."""
    b = prev.alphabet.b
    pad = 2 * (b - 1)
    if not prev.words:
        return pad
    return max(sum(l * n for l, n in w.runs) for w in prev.words) + pad


def p_level_oracle(
    alphabet: Alphabet,
    j: int,
    *,
    prev: LfeLevel | None = None,
    max_len: int | None = None,
    max_words: int | None = DEFAULT_MAX_WORDS,
) -> LfeLevel:
    """Level ``j`` recomputed by filtering a full smooth-word enumeration.

    Keeps every nonempty LFE word whose derivative belongs to level ``j - 1``.
    ``max_len`` must cover every candidate; when omitted it is derived from the
    previous level.
    """
    got = p_level_oracle_many(
        alphabet,
        (j,),
        prev_levels={j: prev} if prev is not None else None,
        max_len=max_len,
        max_words=max_words,
    )
    return got[j]


def p_level_oracle_many(
    alphabet: Alphabet,
    js: tuple[int, ...] | list[int],
    *,
    prev_levels: dict[int, LfeLevel] | None = None,
    max_len: int | None = None,
    max_words: int | None = DEFAULT_MAX_WORDS,
) -> dict[int, LfeLevel]:
    """Oracle levels for several ``j`` from one shared enumeration pass.

    ``prev_levels`` maps each requested ``j`` to level ``j - 1``; missing
    entries are constructed.  The enumeration extends words to the right, so a
    word is harvested through its reversal: reversal turns right extendability
    into left extendability and commutes with the derivative.
    """
    js = sorted(set(js))
    if not js or js[0] < 1:
        raise ValueError("levels must be >= 1")
    prev_levels = dict(prev_levels or {})
    need_built = [j for j in js if prev_levels.get(j) is None]
    if need_built:
        top = max(need_built)
        built = p_levels(alphabet, top - 1) if top > 1 else []
        for j in need_built:
            prev_levels[j] = built[j - 2] if j > 1 else _level0(alphabet)
    for j in js:
        if prev_levels[j].j != j - 1:
            raise ValueError(f"prev level for j={j} has level {prev_levels[j].j}, expected {j - 1}")

    required = max(oracle_length_bound(prev_levels[j]) for j in js)
    if max_len is None:
        max_len = required
    elif max_len < required:
        raise ValueError(f"max_len={max_len} cannot contain all level words; need >= {required}")

    a, b = alphabet.a, alphabet.b
    # Reversed previous-level words, keyed back to their j.
    target: dict[bytes, int] = {}
    for j in js:
        for w in prev_levels[j].words:
            target[w.to_bytes()[::-1]] = j
    lens = {len(t) for t in target}
    lo, hi = (min(lens), max(lens) + 2) if lens else (0, 2)

    hits: dict[int, set[bytes]] = {j: set() for j in js}
    for _, records in tower_sweep(alphabet, max_len, max_words=max_words):
        for word, llr, rho1, lfe in records:
            if not lfe or not (lo <= len(rho1) <= hi):
                continue
            d = derivative_bytes(word, llr, rho1, a, b)
            j = target.get(d)
            if j is not None:
                hits[j].add(word[::-1])
    return {
        j: LfeLevel(alphabet, j, tuple(sorted(Word.from_bytes(alphabet, u) for u in hits[j])))
        for j in js
    }


def lf_k(
    alphabet: Alphabet,
    k: int,
    *,
    max_words: int | None = DEFAULT_MAX_WORDS,
) -> LfeLengthClass:
    """All LFE words of length ``k``, in lexicographic order."""
    if k < 0:
        raise ValueError("length must be >= 0")
    if k == 0:
        return LfeLengthClass(alphabet, 0, (Word.empty(alphabet),))
    words: list[Word] = []
    for n, records in tower_sweep(alphabet, k, max_words=max_words):
        if n == k:
            words = [Word.from_bytes(alphabet, r.word[::-1]) for r in records if r.lfe]
    return LfeLengthClass(alphabet, k, tuple(sorted(words)))


def level_jsonl(level: LfeLevel) -> str:
    """One JSON object per word: compact text, RLE runs, level, length, final letter."""
    lines = []
    for w in level.words:
        lines.append(
            json.dumps(
                {
                    "level": level.j,
                    "length": len(w),
                    "ends_with": w.runs[-1][0] if w.runs else None,
                    "word": w.to_text(),
                    "runs": [[l, n] for l, n in w.runs],
                },
                sort_keys=True,
            )
        )
    return "\n".join(lines) + ("\n" if lines else "")
