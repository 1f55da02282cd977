"""Adjacency predicates, graph builders and class reductions.

Every predicate is set-based: with ``X = [max(a_l, b_l), min(a_r, b_r)]`` the
intervals must intersect (``X`` nonempty); veto semantics then forbid any mark
of either interval in ``X``, while the approval semantics count how many of
the two marks lie in ``X``. On representations with distinct marked points
these agree with the strict-inequality formulations in :func:`strict_adjacent`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import ArityMismatch, TiedPoints
from .model import MIDPOINT, MarkedInterval, Representation, SimpleGraph, as_fraction, min_gap, perturb_distinct


class SemanticsTag(enum.Enum):
    INTERVAL = "interval"
    VETO = "veto"
    VETO_DIRECTED = "veto-directed"
    K_VETO = "k-veto"
    POINT_CORE = "point-core"
    SINGLE_APPROVAL = "single-approval"
    DOUBLE_APPROVAL = "double-approval"

    @classmethod
    def parse(cls, text: str) -> "SemanticsTag":
        key = text.strip().lower().replace("_", "-")
        for tag in cls:
            if tag.value == key:
                return tag
        raise ValueError(f"unknown semantics tag {text!r}")

    def accepts(self, k: int) -> bool:
        if self is SemanticsTag.INTERVAL:
            return k >= 1
        if self is SemanticsTag.K_VETO:
            return k >= 2
        return k == 1

    @property
    def approval(self) -> bool:
        return self in (SemanticsTag.POINT_CORE, SemanticsTag.SINGLE_APPROVAL, SemanticsTag.DOUBLE_APPROVAL)


UNDIRECTED_TAGS = tuple(t for t in SemanticsTag if t is not SemanticsTag.VETO_DIRECTED)


def _check_arity(k: int, s: SemanticsTag) -> None:
    if s is SemanticsTag.VETO_DIRECTED:
        s = SemanticsTag.VETO
    if not s.accepts(k):
        raise ArityMismatch(f"semantics {s.value} does not accept {k} mark(s) per interval")


def adjacent(a: MarkedInterval, b: MarkedInterval, s: SemanticsTag) -> bool:
    if s is SemanticsTag.VETO_DIRECTED:
        raise ValueError("adjacent() takes undirected tags; use build_digraph for orientations")
    if a.k != b.k:
        raise ArityMismatch("intervals carry different numbers of marks")
    _check_arity(a.k, s)
    lo = max(a.left, b.left)
    hi = min(a.right, b.right)
    if lo > hi:
        return False
    if s is SemanticsTag.INTERVAL:
        return True
    if s in (SemanticsTag.VETO, SemanticsTag.K_VETO):
        return not any(lo <= m <= hi for m in a.marks + b.marks)
    inside = (lo <= a.marks[0] <= hi) + (lo <= b.marks[0] <= hi)
    if s is SemanticsTag.POINT_CORE:
        return inside >= 1
    if s is SemanticsTag.SINGLE_APPROVAL:
        return inside == 1
    return inside == 2


def strict_adjacent(a: MarkedInterval, b: MarkedInterval, s: SemanticsTag) -> bool:
    """Strict-inequality forms; only meaningful when all points are distinct.

    Veto: ``a_vk < b_l < a_r < b_v1`` or the mirror. Approval: marks counted in
    the open intersection.
    """
    if s in (SemanticsTag.VETO, SemanticsTag.K_VETO):
        return (a.marks[-1] < b.left < a.right < b.marks[0]) or (b.marks[-1] < a.left < b.right < a.marks[0])
    lo = max(a.left, b.left)
    hi = min(a.right, b.right)
    if not lo < hi:
        return False
    if s is SemanticsTag.INTERVAL:
        return True
    inside = (lo < a.marks[0] < hi) + (lo < b.marks[0] < hi)
    return {SemanticsTag.POINT_CORE: inside >= 1,
            SemanticsTag.SINGLE_APPROVAL: inside == 1,
            SemanticsTag.DOUBLE_APPROVAL: inside == 2}[s]


def build_graph(rep: Representation, s: SemanticsTag) -> SimpleGraph:
    if s is SemanticsTag.VETO_DIRECTED:
        s = SemanticsTag.VETO
    _check_arity(rep.mark_count, s)
    ivs = rep.intervals
    edges = frozenset((i, j) for i, j in combinations(range(len(ivs)), 2) if adjacent(ivs[i], ivs[j], s))
    return SimpleGraph(len(ivs), edges)


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        arcs = frozenset(self.arcs)
        for u, v in arcs:
            if u == v:
                raise ValueError("loop in digraph")
            if (v, u) in arcs:
                raise ValueError(f"both orientations of {{{u}, {v}}} present")
        object.__setattr__(self, "arcs", arcs)

    def underlying(self) -> SimpleGraph:
        return SimpleGraph(self.n, frozenset(self.arcs))

    def to_networkx(self):
        import networkx as nx

        d = nx.DiGraph()
        d.add_nodes_from(range(self.n))
        d.add_edges_from(self.arcs)
        return d


def build_digraph(rep: Representation) -> Digraph:
    """Arc ``a -> b`` iff ``a`` meets ``b`` from the left: ``a_v < b_l < a_r < b_v``."""
    _check_arity(rep.mark_count, SemanticsTag.VETO)
    if not rep.has_distinct_points():
        raise TiedPoints("directed veto graph needs distinct marked points")
    ivs = rep.intervals
    arcs = set()
    for i, a in enumerate(ivs):
        for j, b in enumerate(ivs):
            if i != j and a.marks[0] < b.left < a.right < b.marks[0]:
                arcs.add((i, j))
    return Digraph(len(ivs), frozenset(arcs))


@dataclass(frozen=True)
class PartitionReport:
    interval_edges: frozenset
    veto_edges: frozenset
    pc_edges: frozenset
    sa_edges: frozenset
    da_edges: frozenset

    @property
    def holds(self) -> bool:
        first = (self.veto_edges | self.pc_edges) == self.interval_edges and not (self.veto_edges & self.pc_edges)
        second = (self.sa_edges | self.da_edges) == self.pc_edges and not (self.sa_edges & self.da_edges)
        return first and second

    def counts(self) -> dict[str, int]:
        return {
            "interval": len(self.interval_edges),
            "veto": len(self.veto_edges),
            "point_core": len(self.pc_edges),
            "single_approval": len(self.sa_edges),
            "double_approval": len(self.da_edges),
        }


def partition_check(rep: Representation) -> PartitionReport:
    if not rep.has_distinct_points():
        raise TiedPoints("partition check needs distinct marked points")
    T = SemanticsTag
    return PartitionReport(
        build_graph(rep, T.INTERVAL).edges,
        build_graph(rep, T.VETO).edges,
        build_graph(rep, T.POINT_CORE).edges,
        build_graph(rep, T.SINGLE_APPROVAL).edges,
        build_graph(rep, T.DOUBLE_APPROVAL).edges,
    )


def _nearest_other_distance(points: list[Fraction], x: Fraction) -> Fraction | None:
    dists = [abs(p - x) for p in points if p != x]
    return min(dists) if dists else None


def split_to_k_veto(rep: Representation, k_target: int) -> Representation:
    """Split each interval's first mark into ``k_target - k + 1`` nearby marks.

    The new marks are spread evenly over ``[m - rho, m + rho]`` where ``rho`` is
    half the distance from ``m`` to the nearest other marked point, so no
    other marked point separates them from the original mark.
    """
    k = rep.mark_count
    if k_target < 2:
        raise ValueError("k_target must be at least 2")
    if k_target < k:
        raise ValueError(f"cannot split {k} marks down to {k_target}")
    if k_target == k:
        return rep
    if not rep.has_distinct_points():
        rep = perturb_distinct(rep)
    pts = rep.all_points()
    count = k_target - k + 1
    out = []
    for iv in rep.intervals:
        m = iv.marks[0]
        rho = _nearest_other_distance(pts, m) / 2
        new = tuple(m - rho + 2 * rho * j / (count - 1) for j in range(count))
        out.append(MarkedInterval(iv.left, new + iv.marks[1:], iv.right))
    return Representation(tuple(out), k_target, rep.flavor - {MIDPOINT})


def reduce_to_double(rep: Representation) -> Representation:
    """Keep only the first and last mark of every interval."""
    if rep.mark_count < 2:
        raise ArityMismatch("reduce_to_double needs at least two marks per interval")
    if rep.mark_count == 2:
        return rep
    out = tuple(MarkedInterval(iv.left, (iv.marks[0], iv.marks[-1]), iv.right) for iv in rep.intervals)
    return Representation(out, 2, rep.flavor)


PlainInterval = tuple[Fraction, Fraction]


def interval_graph(intervals: Sequence[Sequence]) -> SimpleGraph:
    """Intersection graph of closed plain intervals."""
    ivs = [(as_fraction(l), as_fraction(r)) for l, r in intervals]
    edges = frozenset(
        (i, j) for i, j in combinations(range(len(ivs)), 2)
        if max(ivs[i][0], ivs[j][0]) <= min(ivs[i][1], ivs[j][1])
    )
    return SimpleGraph(len(ivs), edges)


def interval_to_single_approval(intervals: Iterable[Sequence]) -> Representation:
    """Add an approval mark just right of each left endpoint."""
    ivs = [(as_fraction(l), as_fraction(r)) for l, r in intervals]
    ends = [x for iv in ivs for x in iv]
    if len(set(ends)) != len(ends):
        raise TiedPoints("interval endpoints must be pairwise distinct")
    for l, r in ivs:
        if not l < r:
            raise ValueError(f"degenerate interval [{l}, {r}]")
    gap = min_gap(ends)
    eps = gap / 2 if gap is not None else Fraction(1, 2)
    return Representation(tuple(MarkedInterval(l, (l + eps,), r) for l, r in ivs), 1)
