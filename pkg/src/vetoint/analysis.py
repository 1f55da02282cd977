"""Colorings, chromatic number certificates and class transformations."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import NotMidpointUnit, NotProper, NotUnit, NotUnitIntervals, TooLarge
from .model import (
    MIDPOINT,
    PROPER,
    UNIT,
    MarkedInterval,
    Representation,
    SimpleGraph,
    as_fraction,
    flavor_flags,
    ordering_word,
)

COLOR_NAMES = ("red", "blue", "purple", "orange")
# (parity of floor(l), parity of floor(mark)) -> color index; 1 = odd
_PARITY_COLOR = {(1, 1): 0, (1, 0): 1, (0, 0): 2, (0, 1): 3}

DEFAULT_CHROMATIC_CAP = 20


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    palette: int

    def is_proper(self, g: SimpleGraph) -> bool:
        return all(self.colors[u] != self.colors[v] for u, v in g.edges)

    @property
    def used(self) -> int:
        return len(set(self.colors))

    def names(self) -> list[str]:
        return [COLOR_NAMES[c] if self.palette == 4 and c < 4 else str(c) for c in self.colors]


def _unit_shift(points: Sequence[Fraction]) -> Fraction:
    """A translation after which no point is an integer."""
    fracs = {p - math.floor(p) for p in points}
    if 0 not in fracs:
        return Fraction(0)
    bad = sorted({(1 - f) % 1 for f in fracs} - {0})
    return (bad[0] if bad else Fraction(1)) / 2


def uvi_four_color(rep: Representation) -> Coloring:
    """4-coloring of the veto graph of a unit representation from floor parities.

    Coordinates are divided by the common length, then translated off the
    integers if needed; the graph is unchanged by both steps.
    """
    if rep.mark_count != 1:
        raise NotUnit("parity coloring needs one mark per interval")
    if UNIT not in flavor_flags(rep):
        raise NotUnit("interval lengths differ")
    if rep.n == 0:
        return Coloring((), 4)
    c = rep.intervals[0].length
    scaled = [(iv.left / c, iv.marks[0] / c) for iv in rep.intervals]
    shift = _unit_shift([x for pair in scaled for x in pair])
    colors = []
    for left, mark in scaled:
        key = (math.floor(left + shift) % 2, math.floor(mark + shift) % 2)
        colors.append(_PARITY_COLOR[key])
    return Coloring(tuple(colors), 4)


# --- chromatic number -------------------------------------------------------------------


@dataclass
class ChromaticCertificate:
    chi: int
    coloring: Coloring
    clique: tuple[int, ...]  # lower-bound witness
    refuted: int | None  # palette size proved infeasible (chi - 1), None when the clique suffices
    refutation_nodes: int  # search nodes spent exhausting the refuted palette

    def verify(self, g: SimpleGraph) -> bool:
        ok = self.coloring.is_proper(g) and self.coloring.used <= self.chi
        ok = ok and all(g.has_edge(u, v) for u, v in combinations(self.clique, 2))
        return ok and (self.refuted is None or self.refuted == self.chi - 1)


def _max_clique(g: SimpleGraph) -> tuple[int, ...]:
    import networkx as nx

    best: tuple[int, ...] = (0,) if g.n else ()
    for c in nx.find_cliques(g.to_networkx()):
        if len(c) > len(best) or (len(c) == len(best) and tuple(sorted(c)) < best):
            best = tuple(sorted(c))
    return best


def _color_search(adj: list[set[int]], palette: int, seed: Sequence[int]) -> tuple[list[int] | None, int]:
    """DSATUR backtracking for a ``palette``-coloring; ``seed`` vertices get
    colors 0, 1, ... (a clique, so this loses no generality)."""
    n = len(adj)
    color = [-1] * n
    for i, v in enumerate(seed):
        color[v] = i
    nodes = 0

    def pick() -> int:
        best, key = -1, None
        for v in range(n):
            if color[v] >= 0:
                continue
            sat = len({color[u] for u in adj[v] if color[u] >= 0})
            k = (sat, len(adj[v]), -v)
            if key is None or k > key:
                best, key = v, k
        return best

    def rec(top: int) -> bool:
        nonlocal nodes
        nodes += 1
        v = pick()
        if v < 0:
            return True
        taken = {color[u] for u in adj[v]}
        # a fresh color is interchangeable with any other unused one
        for c in range(min(palette, top + 1)):
            if c in taken:
                continue
            color[v] = c
            if rec(max(top, c + 1)):
                return True
            color[v] = -1
        return False

    ok = rec(len(seed))
    return (color if ok else None), nodes


def chromatic_number(g: SimpleGraph, cap: int = DEFAULT_CHROMATIC_CAP) -> ChromaticCertificate:
    """Exact chromatic number with a coloring and an exhausted search one color lower."""
    if g.n > cap:
        raise TooLarge(f"{g.n} vertices exceeds the cap of {cap}")
    if g.n == 0:
        return ChromaticCertificate(0, Coloring((), 0), (), None, 0)
    adj = g.adjacency()
    clique = _max_clique(g)
    k = len(clique)
    refuted, refutation_nodes = None, 0
    while True:
        colors, nodes = _color_search(adj, k, clique)
        if colors is not None:
            break
        refuted, refutation_nodes = k, nodes
        k += 1
    return ChromaticCertificate(k, Coloring(tuple(colors), k), clique, refuted, refutation_nodes)


def is_triangle_free(g: SimpleGraph) -> bool:
    adj = g.adjacency()
    return not any(adj[u] & adj[v] for u, v in g.edges)


# --- transformations --------------------------------------------------------------------


def proper_to_unit(rep: Representation) -> Representation:
    """Unit representation with the same ordering word as a proper one.

    The word's strict order constraints plus ``r = l + 1`` form a difference
    system, solved exactly; a proper word always admits a solution.
    """
    from .recognize.lp import realizable

    if rep.mark_count != 1:
        raise NotProper("only one mark per interval is supported")
    if PROPER not in flavor_flags(rep):
        raise NotProper("some interval properly contains another")
    word = ordering_word(rep)
    out = realizable(word, {UNIT}, method="difference")
    if out is None:
        raise AssertionError(f"proper word {word} has no unit realization")
    return out.with_flavor(rep.flavor | {UNIT, PROPER})


def muda_to_unit_interval(rep: Representation) -> list[tuple[Fraction, Fraction]]:
    """``(a, a+c, a+2c)`` becomes the closed interval ``[a+c/2, a+3c/2]``.

    Two midpoint intervals of half-length ``c`` contain each other's marks in
    their intersection exactly when ``|a - b| <= c``, the overlap condition of
    the images.
    """
    if rep.mark_count != 1 or not {UNIT, MIDPOINT} <= flavor_flags(rep):
        raise NotMidpointUnit("need equal lengths and centred marks")
    out = []
    for iv in rep.intervals:
        c = iv.length / 2
        out.append((iv.left + c / 2, iv.left + 3 * c / 2))
    return out


def unit_interval_to_muda(intervals: Sequence[Sequence]) -> Representation:
    """Inverse of :func:`muda_to_unit_interval`: ``[x, x+c]`` becomes ``(x-c/2, x+c/2, x+3c/2)``."""
    ivs = [(as_fraction(a), as_fraction(b)) for a, b in intervals]
    lengths = {b - a for a, b in ivs}
    if len(lengths) > 1 or any(x <= 0 for x in lengths):
        raise NotUnitIntervals("intervals must have one common positive length")
    out = []
    for a, b in ivs:
        c = b - a
        out.append(MarkedInterval(a - c / 2, (a + c / 2,), a + 3 * c / 2))
    return Representation(tuple(out), 1, frozenset({UNIT, MIDPOINT, PROPER}))


@dataclass(frozen=True)
class OrderCheck:
    passed: bool
    pair: tuple[int, int] | None = None
    where: str | None = None  # "marks" or "rights": which sequence disagrees with the lefts


def mpvi_order_check(rep: Representation) -> OrderCheck:
    """Do left ends, marks and right ends put the vertices in the same order?"""
    if rep.mark_count != 1:
        raise ValueError("order check needs one mark per interval")

    def sign(x: Fraction) -> int:
        return (x > 0) - (x < 0)

    for i, j in combinations(range(rep.n), 2):
        a, b = rep.intervals[i], rep.intervals[j]
        sl = sign(a.left - b.left)
        sm = sign(a.marks[0] - b.marks[0])
        sr = sign(a.right - b.right)
        if sl * sm < 0:
            return OrderCheck(False, (i, j), "marks")
        if sl * sr < 0 or sm * sr < 0:
            return OrderCheck(False, (i, j), "rights")
    return OrderCheck(True)
