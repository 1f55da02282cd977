"""Exact data model: marked intervals, representations, graphs, ordering words.

Coordinates are :class:`fractions.Fraction` everywhere. A marked interval is
``(left, m_1, ..., m_k, right)``; a representation is an indexed list of
intervals with a uniform mark count and a set of declared flavor flags.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import TiedPoints

UNIT = "unit"
PROPER = "proper"
MIDPOINT = "midpoint"
FLAVORS = (UNIT, PROPER, MIDPOINT)

# Point classes used for tie-breaking and ordering words.
LEFT, MARK, RIGHT = 0, 1, 2


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        # Floats only enter through literals like 2.5; keep the decimal meaning.
        return Fraction(repr(x))
    return Fraction(x)


@dataclass(frozen=True)
class MarkedInterval:
    left: Fraction
    marks: tuple[Fraction, ...]
    right: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "left", as_fraction(self.left))
        object.__setattr__(self, "marks", tuple(as_fraction(m) for m in self.marks))
        object.__setattr__(self, "right", as_fraction(self.right))

    @classmethod
    def of(cls, *coords) -> "MarkedInterval":
        """Build from a flat coordinate tuple ``(l, m_1, ..., m_k, r)``."""
        if len(coords) == 1 and not isinstance(coords[0], (int, Fraction, float, str)):
            coords = tuple(coords[0])
        if len(coords) < 3:
            raise ValueError("a marked interval needs a left end, at least one mark and a right end")
        return cls(coords[0], tuple(coords[1:-1]), coords[-1])

    @property
    def points(self) -> tuple[Fraction, ...]:
        return (self.left, *self.marks, self.right)

    @property
    def length(self) -> Fraction:
        return self.right - self.left

    @property
    def k(self) -> int:
        return len(self.marks)

    def contains(self, x: Fraction) -> bool:
        return self.left <= x <= self.right

    def shifted(self, delta: Fraction) -> "MarkedInterval":
        return MarkedInterval(self.left + delta, tuple(m + delta for m in self.marks), self.right + delta)

    def mapped(self, f) -> "MarkedInterval":
        return MarkedInterval(f(self.left), tuple(f(m) for m in self.marks), f(self.right))

    def __str__(self) -> str:
        return "(" + ", ".join(str(p) for p in self.points) + ")"


@dataclass(frozen=True)
class Representation:
    intervals: tuple[MarkedInterval, ...]
    mark_count: int = 1
    flavor: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "intervals", tuple(self.intervals))
        object.__setattr__(self, "flavor", frozenset(self.flavor))

    @classmethod
    def from_tuples(cls, tuples: Iterable[Sequence], flavor: Iterable[str] = ()) -> "Representation":
        intervals = tuple(MarkedInterval.of(*t) for t in tuples)
        k = intervals[0].k if intervals else 1
        return cls(intervals, k, frozenset(flavor))

    @property
    def n(self) -> int:
        return len(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def __getitem__(self, i: int) -> MarkedInterval:
        return self.intervals[i]

    def with_flavor(self, flavor: Iterable[str]) -> "Representation":
        return Representation(self.intervals, self.mark_count, frozenset(flavor))

    def with_intervals(self, intervals: Iterable[MarkedInterval]) -> "Representation":
        intervals = tuple(intervals)
        k = intervals[0].k if intervals else self.mark_count
        return Representation(intervals, k, self.flavor)

    def delete(self, i: int) -> "Representation":
        return Representation(self.intervals[:i] + self.intervals[i + 1:], self.mark_count, self.flavor)

    def mapped(self, f) -> "Representation":
        """Apply a coordinate map to every marked point."""
        return Representation(tuple(iv.mapped(f) for iv in self.intervals), self.mark_count, self.flavor)

    def all_points(self) -> list[Fraction]:
        return [p for iv in self.intervals for p in iv.points]

    def has_distinct_points(self) -> bool:
        pts = self.all_points()
        return len(set(pts)) == len(pts)

    def as_tuples(self) -> list[tuple[Fraction, ...]]:
        return [iv.points for iv in self.intervals]


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            norm.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", frozenset(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def delete(self, v: int) -> "SimpleGraph":
        """Remove vertex ``v`` and relabel the vertices above it down by one."""
        def f(x: int) -> int:
            return x - 1 if x > v else x
        return SimpleGraph(self.n - 1, frozenset((f(a), f(b)) for a, b in self.edges if v not in (a, b)))

    def induced(self, vertices: Sequence[int]) -> "SimpleGraph":
        index = {v: i for i, v in enumerate(vertices)}
        return SimpleGraph(
            len(vertices),
            frozenset((index[a], index[b]) for a, b in self.edges if a in index and b in index),
        )

    def relabel(self, perm: Sequence[int]) -> "SimpleGraph":
        """Vertex ``v`` becomes ``perm[v]``."""
        return SimpleGraph(self.n, frozenset((perm[a], perm[b]) for a, b in self.edges))

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g


Symbol = tuple[int, int]  # (vertex, slot); slot 0 = left end, 1..k = marks, k+1 = right end


@dataclass(frozen=True)
class OrderingWord:
    """Total order of the (k+2)n marked-point symbols."""

    n: int
    k: int
    symbols: tuple[Symbol, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "symbols", tuple(tuple(s) for s in self.symbols))
        if len(self.symbols) != (self.k + 2) * self.n:
            raise ValueError("ordering word has the wrong number of symbols")
        seen = [0] * self.n
        for v, slot in self.symbols:
            if slot != seen[v]:
                raise ValueError(f"symbol order violated for vertex {v}")
            seen[v] += 1

    def kind(self, slot: int) -> int:
        if slot == 0:
            return LEFT
        return RIGHT if slot == self.k + 1 else MARK

    def symbol_name(self, s: Symbol) -> str:
        v, slot = s
        if slot == 0:
            return f"L{v}"
        if slot == self.k + 1:
            return f"R{v}"
        return f"M{v}" if self.k == 1 else f"M{v}.{slot - 1}"

    def __str__(self) -> str:
        return " ".join(self.symbol_name(s) for s in self.symbols)

    def __lt__(self, other: "OrderingWord") -> bool:
        return self.symbols < other.symbols

    def positions(self) -> dict[Symbol, int]:
        return {s: i for i, s in enumerate(self.symbols)}

    def vertex_sequence(self) -> list[int]:
        return [v for v, _ in self.symbols]

    @classmethod
    def parse(cls, text: str, k: int = 1) -> "OrderingWord":
        syms: list[Symbol] = []
        for tok in text.split():
            kind, rest = tok[0], tok[1:]
            if kind == "L":
                syms.append((int(rest), 0))
            elif kind == "R":
                syms.append((int(rest), k + 1))
            elif kind == "M":
                if "." in rest:
                    v, j = rest.split(".")
                    syms.append((int(v), int(j) + 1))
                else:
                    syms.append((int(rest), 1))
            else:
                raise ValueError(f"bad symbol {tok!r}")
        n = 1 + max((v for v, _ in syms), default=-1)
        return cls(n, k, tuple(syms))

    @classmethod
    def from_vertex_sequence(cls, seq: Sequence[int], k: int = 1) -> "OrderingWord":
        """Each occurrence of vertex ``v`` takes its next slot."""
        n = 1 + max(seq, default=-1)
        count = [0] * n
        syms = []
        for v in seq:
            syms.append((v, count[v]))
            count[v] += 1
        return cls(n, k, tuple(syms))


def validate_representation(rep: Representation) -> list[str]:
    """Return every invariant breach of ``rep``; an empty list means valid."""
    findings: list[str] = []
    for i, iv in enumerate(rep.intervals):
        if iv.k != rep.mark_count:
            findings.append(f"interval {i}: has {iv.k} marks, expected {rep.mark_count}")
        pts = iv.points
        if any(a >= b for a, b in zip(pts, pts[1:])):
            findings.append(f"interval {i}: marked points not strictly increasing {iv}")
    unknown = set(rep.flavor) - set(FLAVORS)
    for f in sorted(unknown):
        findings.append(f"unknown flavor flag {f!r}")
    if findings:
        return findings
    actual = flavor_flags(rep)
    for flag in sorted(set(rep.flavor) & set(FLAVORS)):
        if flag in actual:
            continue
        if flag == UNIT:
            findings.append("unit: interval lengths differ")
        elif flag == PROPER:
            a, b = _first_containment(rep)
            findings.append(f"proper: interval {a} properly contains interval {b}")
        elif flag == MIDPOINT:
            if rep.mark_count != 1:
                findings.append("midpoint: only defined for one mark per interval")
            else:
                bad = next(i for i, iv in enumerate(rep.intervals) if 2 * iv.marks[0] != iv.left + iv.right)
                findings.append(f"midpoint: interval {bad} mark not at midpoint")
    return findings


def _properly_contains(a: MarkedInterval, b: MarkedInterval) -> bool:
    return a.left <= b.left and b.right <= a.right and (a.left, a.right) != (b.left, b.right)


def _first_containment(rep: Representation) -> tuple[int, int] | None:
    for i, j in combinations(range(rep.n), 2):
        a, b = rep.intervals[i], rep.intervals[j]
        if _properly_contains(a, b):
            return i, j
        if _properly_contains(b, a):
            return j, i
    return None


def flavor_flags(rep: Representation) -> frozenset[str]:
    """Flags among unit/proper/midpoint whose defining condition holds."""
    flags = set()
    ivs = rep.intervals
    if len({iv.length for iv in ivs}) <= 1:
        flags.add(UNIT)
    if _first_containment(rep) is None:
        flags.add(PROPER)
    if rep.mark_count == 1 and all(2 * iv.marks[0] == iv.left + iv.right for iv in ivs):
        flags.add(MIDPOINT)
    return frozenset(flags)


def min_gap(points: Iterable[Fraction]) -> Fraction | None:
    vals = sorted(set(points))
    gaps = [b - a for a, b in zip(vals, vals[1:])]
    return min(gaps) if gaps else None


def _point_class(slot: int, k: int) -> int:
    if slot == 0:
        return LEFT
    return RIGHT if slot == k + 1 else MARK


def perturb_distinct(rep: Representation) -> Representation:
    """Break every coincidence of marked points without changing any graph.

    Ties are resolved so that left ends precede marks and marks precede right
    ends at a shared coordinate; every set-based adjacency predicate is then
    unchanged. Intervals move by rigid translations (so unit, proper and
    midpoint flags survive) whenever the tie constraints are acyclic, which is
    always the case with one mark per interval.
    """
    if rep.has_distinct_points():
        return rep
    n, k = rep.n, rep.mark_count
    step = min_gap(rep.all_points()) / (3 * n + 1)

    by_coord: dict[Fraction, list[tuple[int, int]]] = defaultdict(list)
    for i, iv in enumerate(rep.intervals):
        for slot, p in enumerate(iv.points):
            by_coord[p].append((i, _point_class(slot, k)))

    # before[a] holds intervals that must be shifted strictly more than a.
    before: dict[int, set[int]] = defaultdict(set)
    tied: set[int] = set()
    for members in by_coord.values():
        if len(members) < 2:
            continue
        for (a, ca), (b, cb) in combinations(members, 2):
            if a == b:
                continue
            tied.update((a, b))
            if ca < cb:
                before[a].add(b)
            elif cb < ca:
                before[b].add(a)

    levels = _longest_path_levels(sorted(tied), before)
    if levels is not None:
        order = sorted(tied, key=lambda i: (levels[i], i))
        shift = {i: step * (r + 1) / (len(order) + 1) for r, i in enumerate(order)}
        out = tuple(iv.shifted(shift.get(i, Fraction(0))) for i, iv in enumerate(rep.intervals))
        return Representation(out, k, rep.flavor)
    return _perturb_pointwise(rep, step)


def _longest_path_levels(nodes: list[int], succ: dict[int, set[int]]) -> dict[int, int] | None:
    """Longest-path layering of a DAG; None when the constraint graph has a cycle."""
    indeg = {v: 0 for v in nodes}
    for v in nodes:
        for w in succ.get(v, ()):
            indeg[w] += 1
    level = {v: 0 for v in nodes}
    ready = sorted(v for v in nodes if indeg[v] == 0)
    seen = 0
    while ready:
        v = ready.pop()
        seen += 1
        for w in succ.get(v, ()):
            level[w] = max(level[w], level[v] + 1)
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    return level if seen == len(nodes) else None


def _perturb_pointwise(rep: Representation, step: Fraction) -> Representation:
    # Only reachable with k >= 2: per-point shifts inside each tie group, then
    # unit length restored through the realizability solver when it was present.
    k = rep.mark_count
    groups: dict[Fraction, list[tuple[int, int, int]]] = defaultdict(list)
    for i, iv in enumerate(rep.intervals):
        for slot, p in enumerate(iv.points):
            groups[p].append((_point_class(slot, k), i, slot))
    new_pts = [list(iv.points) for iv in rep.intervals]
    for p, members in groups.items():
        members.sort()
        for r, (_, i, slot) in enumerate(members):
            new_pts[i][slot] = p + step * r / len(members)
    out = Representation.from_tuples(new_pts, rep.flavor)
    want = flavor_flags(rep) & rep.flavor
    if want - flavor_flags(out):
        from .recognize.lp import realizable

        coords = realizable(ordering_word(out), want)
        if coords is not None:
            out = Representation(coords.intervals, k, rep.flavor)
    return out


def ordering_word(rep: Representation) -> OrderingWord:
    """Sort the marked-point symbols by coordinate; requires distinct points."""
    k = rep.mark_count
    tagged = [(p, (i, slot)) for i, iv in enumerate(rep.intervals) for slot, p in enumerate(iv.points)]
    tagged.sort()
    for (p, s), (q, t) in zip(tagged, tagged[1:]):
        if p == q:
            raise TiedPoints(f"marked points {s} and {t} coincide at {p}")
    return OrderingWord(rep.n, k, tuple(s for _, s in tagged))


def rep_from_word(word: OrderingWord, coords: Sequence[Fraction] | None = None,
                  flavor: Iterable[str] = ()) -> Representation:
    """Place symbol ``j`` of ``word`` at ``coords[j]`` (rank ``j + 1`` by default)."""
    if coords is None:
        coords = [Fraction(j + 1) for j in range(len(word.symbols))]
    pts = [[Fraction(0)] * (word.k + 2) for _ in range(word.n)]
    for (v, slot), x in zip(word.symbols, coords):
        pts[v][slot] = as_fraction(x)
    return Representation(tuple(MarkedInterval.of(*p) for p in pts), word.k, frozenset(flavor))
