"""Pair-pattern automaton driving the ordering-word search.

For two vertices ``a < b`` the relative order of their ``2(k+2)`` symbols is
a word over ``{0, 1}`` (0 for ``a``, 1 for ``b``). The adjacency of ``a`` and
``b`` and the flavor admissibility of the pair depend only on that pattern,
so each prefix of it is precompiled into a state carrying

* ``mask``: bit 0 set if some admissible completion is non-adjacent, bit 1
  if some admissible completion is adjacent (0 means dead);
* ``swap``: whether exchanging the last symbol with a following symbol of
  the other vertex leaves adjacency and admissibility unchanged for every
  completion.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from ..model import MIDPOINT, PROPER, UNIT, OrderingWord, rep_from_word
from ..semantics import SemanticsTag, adjacent
from .lp import realizable


@dataclass(frozen=True)
class PairTable:
    k: int
    trans: tuple[int, ...]  # trans[2*state + side] -> state, -1 if side exhausted
    mask: tuple[int, ...]
    swap: tuple[bool, ...]
    patterns: tuple[tuple[int, ...], ...]

    @property
    def start(self) -> int:
        return 0


def _pattern_word(pattern: tuple[int, ...], k: int) -> OrderingWord:
    return OrderingWord.from_vertex_sequence(pattern, k)


def _full_patterns(k: int) -> list[tuple[int, ...]]:
    size = k + 2
    out = []
    for ones in combinations(range(2 * size), size):
        s = set(ones)
        out.append(tuple(1 if i in s else 0 for i in range(2 * size)))
    return out


def _evaluate(pattern: tuple[int, ...], k: int, tag: SemanticsTag, flavor: frozenset[str]) -> tuple[bool, bool]:
    """(admissible, adjacent) for a complete pair pattern."""
    word = _pattern_word(pattern, k)
    if flavor & {UNIT, MIDPOINT} or PROPER in flavor:
        admissible = realizable(word, flavor) is not None
    else:
        admissible = True
    rep = rep_from_word(word)
    return admissible, adjacent(rep[0], rep[1], tag)


@lru_cache(maxsize=None)
def pair_table(tag: SemanticsTag, k: int, flavor: frozenset[str]) -> PairTable:
    size = k + 2
    full = {p: _evaluate(p, k, tag, flavor) for p in _full_patterns(k)}

    patterns: list[tuple[int, ...]] = [()]
    index = {(): 0}
    i = 0
    while i < len(patterns):
        p = patterns[i]
        for side in (0, 1):
            q = p + (side,)
            if q.count(side) <= size and q not in index:
                index[q] = len(patterns)
                patterns.append(q)
        i += 1

    def completions(p: tuple[int, ...]):
        return [f for f in full if f[: len(p)] == p]

    trans = []
    mask = []
    swap = []
    for p in patterns:
        for side in (0, 1):
            trans.append(index.get(p + (side,), -1))
        m = 0
        for f in completions(p):
            adm, adj = full[f]
            if adm:
                m |= 2 if adj else 1
        mask.append(m)
        swap.append(_swap_neutral(p, full))
    return PairTable(k, tuple(trans), tuple(mask), tuple(swap), tuple(patterns))


def _swap_neutral(p: tuple[int, ...], full: dict) -> bool:
    """Is ``parent + X + Y`` equivalent to ``parent + Y + X`` for every completion?"""
    if not p:
        return False
    parent, x = p[:-1], p[-1]
    y = 1 - x
    xy = parent + (x, y)
    yx = parent + (y, x)
    size = len(next(iter(full))) // 2
    if xy.count(y) > size or yx.count(x) > size:
        return False
    for f in full:
        if f[: len(xy)] == xy:
            g = yx + f[len(xy):]
            if full[f] != full[g]:
                return False
    return True
