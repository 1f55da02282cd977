"""Exhaustive search over ordering words.

A word is built one symbol at a time. After each symbol the pair automaton of
every affected vertex pair is advanced and the branch is cut as soon as some
pair's adjacency is forced to disagree with the target graph, or some pair
can no longer be completed admissibly for the requested flavor.

Reductions that keep the search exhaustive:

* first symbol: only the left end of the smallest vertex of each
  automorphism orbit may open the word;
* adjacent-swap canonicity (flavors without a midpoint constraint): if the
  last symbol belongs to vertex ``a`` and the next to ``b < a`` and the
  exchange changes nothing for the pair ``{a, b}`` whatever follows, the
  branch is dropped, since the exchanged word is lexicographically smaller
  and yields the same graph.

Veto graphs are triangle-free, so a triangle answers ``no`` at once, and
:func:`recognize` works component by component: the classes are closed under
induced subgraphs and disjoint unions (translate each witness past the last).

Midpoint flavors are checked with the exact linear system on the prefix every
``prefix_check_every`` symbols and on every complete word.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from typing import Iterable

from ..model import (
    MIDPOINT,
    PROPER,
    UNIT,
    OrderingWord,
    Representation,
    SimpleGraph,
    flavor_flags,
    ordering_word,
)
from ..semantics import SemanticsTag, build_graph
from .lp import build_prefix_system, feasible, realizable
from .pairs import pair_table

DEFAULT_TIME_LIMIT = 600.0


class Verdict(enum.Enum):
    YES = "yes"
    NO = "no"
    TIMEOUT = "timeout"


@dataclass
class SearchStats:
    nodes: int = 0
    leaves: int = 0
    lp_calls: int = 0
    seconds: float = 0.0


@dataclass
class RecognitionResult:
    verdict: Verdict
    witness: Representation | None = None
    word: OrderingWord | None = None
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def yes(self) -> bool:
        return self.verdict is Verdict.YES


@dataclass(frozen=True)
class Budget:
    seconds: float | None = DEFAULT_TIME_LIMIT
    nodes: int | None = None


class _Timeout(Exception):
    pass


def automorphism_orbits(g: SimpleGraph) -> list[int]:
    """``orbit_min[v]``: smallest vertex that some automorphism maps to ``v``."""
    import networkx as nx
    from networkx.algorithms.isomorphism import GraphMatcher

    G = g.to_networkx()
    rep = list(range(g.n))
    degree = [G.degree(v) for v in range(g.n)]
    for v in range(g.n):
        for u in range(v):
            if rep[u] != u or degree[u] != degree[v]:
                continue
            A = G.copy()
            B = G.copy()
            nx.set_node_attributes(A, {w: w == u for w in A}, "pin")
            nx.set_node_attributes(B, {w: w == v for w in B}, "pin")
            gm = GraphMatcher(A, B, node_match=lambda x, y: x["pin"] == y["pin"])
            if gm.is_isomorphic():
                rep[v] = u
                break
    return rep


class OrderingSearch:
    def __init__(self, g: SimpleGraph, tag: SemanticsTag, flavor: Iterable[str] = (), k: int | None = None,
                 budget: Budget | None = None, prefix_check_every: int = 6, use_symmetry: bool = True,
                 use_swap: bool = True):
        if tag is SemanticsTag.VETO_DIRECTED:
            raise ValueError("recognition works on undirected semantics")
        self.g = g
        self.tag = tag
        self.flavor = frozenset(flavor)
        if k is None:
            k = 2 if tag is SemanticsTag.K_VETO else 1
        if not tag.accepts(k):
            raise ValueError(f"{tag.value} does not accept k={k}")
        if MIDPOINT in self.flavor and k != 1:
            raise ValueError("midpoint flavor needs k=1")
        self.k = k
        self.budget = budget or Budget()
        self.prefix_check_every = prefix_check_every
        self.use_symmetry = use_symmetry
        self.use_swap = use_swap and not (self.flavor & {MIDPOINT})
        self.lp_flavor = self.flavor & {UNIT, MIDPOINT}
        # leaf LP needed when the geometric constraints are not implied by pair patterns
        self.leaf_lp = bool(self.flavor & {MIDPOINT})
        self.prefix_lp = MIDPOINT in self.flavor
        self.table = pair_table(tag, k, self.flavor)
        self.stats = SearchStats()

    def run(self) -> RecognitionResult:
        n, size = self.g.n, self.k + 2
        t0 = time.monotonic()
        self._deadline = None if self.budget.seconds is None else t0 + self.budget.seconds
        if n == 0:
            word = OrderingWord(0, self.k, ())
            return RecognitionResult(Verdict.YES, Representation((), self.k, self.flavor), word, self.stats)
        if self.tag in (SemanticsTag.VETO, SemanticsTag.K_VETO) and _has_triangle(self.g):
            stats_only = RecognitionResult(Verdict.NO, None, None, self.stats)
            self.stats.seconds = time.monotonic() - t0
            return stats_only
        tr, mask, swap = self.table.trans, self.table.mask, self.table.swap
        need = [0] * (n * n)
        for u in range(n):
            for v in range(u + 1, n):
                need[u * n + v] = 2 if self.g.has_edge(u, v) else 1
        first_ok = [True] * n
        if self.use_symmetry:
            orb = automorphism_orbits(self.g)
            first_ok = [orb[v] == v for v in range(n)]

        state = [0] * (n * n)
        placed = [0] * n
        word: list[tuple[int, int]] = []
        total = size * n
        stats = self.stats
        node_cap = self.budget.nodes
        deadline = self._deadline

        def leaf() -> Representation | None:
            stats.leaves += 1
            w = OrderingWord(n, self.k, tuple(word))
            if self.lp_flavor or PROPER in self.flavor:
                stats.lp_calls += 1
                rep = realizable(w, self.flavor)
                if rep is None:
                    return None
            else:
                rep = realizable(w, self.flavor)
            return rep

        def prefix_feasible() -> bool:
            stats.lp_calls += 1
            system = build_prefix_system(n, self.k, word, self.lp_flavor)
            return feasible(system) is not None

        found: list = []

        def dfs(depth: int) -> bool:
            stats.nodes += 1
            if node_cap is not None and stats.nodes > node_cap:
                raise _Timeout
            if deadline is not None and (stats.nodes & 1023) == 0 and time.monotonic() > deadline:
                raise _Timeout
            if depth == total:
                rep = leaf()
                if rep is not None:
                    found.append(rep)
                    return True
                return False
            last = word[-1][0] if word else -1
            for v in range(n):
                if placed[v] == size:
                    continue
                if depth == 0 and not first_ok[v]:
                    continue
                if self.use_swap and 0 <= v < last:
                    # last symbol is a's and the pair (v, last) state ends with it
                    if swap[state[v * n + last]]:
                        continue
                saved = []
                ok = True
                for u in range(n):
                    if u == v:
                        continue
                    if u < v:
                        idx, side = u * n + v, 1
                    else:
                        idx, side = v * n + u, 0
                    old = state[idx]
                    new = tr[2 * old + side]
                    saved.append((idx, old))
                    state[idx] = new
                    if not (mask[new] & need[idx]):
                        ok = False
                        break
                if ok:
                    word.append((v, placed[v]))
                    placed[v] += 1
                    if (self.prefix_lp and depth + 1 < total and (depth + 1) % self.prefix_check_every == 0
                            and not prefix_feasible()):
                        ok = False
                    elif dfs(depth + 1):
                        return True
                    placed[v] -= 1
                    word.pop()
                for idx, old in saved:
                    state[idx] = old
            return False

        try:
            hit = dfs(0)
            verdict = Verdict.YES if hit else Verdict.NO
        except _Timeout:
            verdict = Verdict.TIMEOUT
        stats.seconds = time.monotonic() - t0
        if verdict is Verdict.YES:
            rep = found[0]
            w = OrderingWord(n, self.k, tuple(word))
            self._verify(rep)
            return RecognitionResult(verdict, rep, w, stats)
        return RecognitionResult(verdict, None, None, stats)

    def _verify(self, rep: Representation) -> None:
        if build_graph(rep, self.tag) != self.g:
            raise AssertionError("witness does not reproduce the input graph")
        if not self.flavor <= flavor_flags(rep):
            raise AssertionError("witness misses a requested flavor")


def _has_triangle(g: SimpleGraph) -> bool:
    adj = g.adjacency()
    return any(adj[u] & adj[v] for u, v in g.edges)


def _components(g: SimpleGraph) -> list[list[int]]:
    adj = g.adjacency()
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [], [s]
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        out.append(sorted(comp))
    return out


def recognize(g: SimpleGraph, tag: SemanticsTag, flavor: Iterable[str] = (), budget: Budget | None = None,
              k: int | None = None, split_components: bool = True, **options) -> RecognitionResult:
    """Decide whether ``g`` has a representation of the given semantics and flavor.

    ``options`` are passed to :class:`OrderingSearch` (``prefix_check_every``,
    ``use_symmetry``, ``use_swap``).
    """
    comps = _components(g)
    if not split_components or len(comps) <= 1:
        return OrderingSearch(g, tag, flavor, k=k, budget=budget, **options).run()
    budget = budget or Budget()
    t0 = time.monotonic()
    total = SearchStats()
    parts = []
    for comp in sorted(comps, key=len, reverse=True):
        spent = time.monotonic() - t0
        left = Budget(None if budget.seconds is None else max(budget.seconds - spent, 0.0),
                      None if budget.nodes is None else max(budget.nodes - total.nodes, 0))
        res = OrderingSearch(g.induced(comp), tag, flavor, k=k, budget=left, **options).run()
        for name in ("nodes", "leaves", "lp_calls"):
            setattr(total, name, getattr(total, name) + getattr(res.stats, name))
        if not res.yes:
            total.seconds = time.monotonic() - t0
            return RecognitionResult(res.verdict, None, None, total)
        parts.append((comp, res.witness))
    # lay the component witnesses out left to right, unit ones rescaled to length 1
    placed = {}
    offset = None
    for comp, rep in sorted(parts, key=lambda p: p[0][0]):
        if UNIT in rep.flavor or UNIT in frozenset(flavor):
            length = rep.intervals[0].length
            rep = rep.mapped(lambda x, s=length: x / s)
        lo = min(iv.left for iv in rep.intervals)
        hi = max(iv.right for iv in rep.intervals)
        shift = 0 if offset is None else offset - lo
        for v, iv in zip(comp, rep.intervals):
            placed[v] = iv.mapped(lambda x, d=shift: x + d)
        offset = hi + shift + 1
    intervals = tuple(placed[v] for v in range(g.n))
    mark_count = parts[0][1].mark_count
    witness = Representation(intervals, mark_count, flavor_flags(Representation(intervals, mark_count)))
    if not frozenset(flavor) <= witness.flavor:
        raise AssertionError("merged witness misses a requested flavor")
    if build_graph(witness, tag) != g:
        raise AssertionError("merged witness does not reproduce the input graph")
    total.seconds = time.monotonic() - t0
    return RecognitionResult(Verdict.YES, witness, ordering_word(witness), total)
