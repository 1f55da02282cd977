"""Orientation feasibility, a necessary condition for veto interval graphs.

In a directed veto interval graph no directed path on three or more vertices
joins two adjacent vertices. Equivalently, the orientation is acyclic and no
arc is implied by a longer directed path. A graph with no such orientation
is not a VI graph.

Enumeration assigns edge directions one at a time with bitmask reachability;
a partial orientation that already contains a violating path is never
extended, since adding arcs cannot remove the path. ``prune=False`` checks
all ``2**m`` orientations one by one instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import TooManyEdges
from ..model import SimpleGraph
from ..semantics import Digraph

DEFAULT_EDGE_CAP = 24


@dataclass
class OrientationReport:
    graph: SimpleGraph
    total: int  # 2**m orientations covered
    feasible: int
    classes: list[Digraph] | None  # isomorphism class representatives, None if not grouped
    visited: int = 0  # search nodes (pruned mode) or orientations checked
    orientations: list[Digraph] = field(default_factory=list, repr=False)

    @property
    def class_count(self) -> int | None:
        return None if self.classes is None else len(self.classes)


def violates(d: Digraph) -> bool:
    """Does ``d`` contain a directed path on >= 3 vertices with adjacent ends?"""
    n = d.n
    adj = [0] * n
    for u, v in d.arcs:
        adj[u] |= 1 << v
    und = [0] * n
    for u, v in d.arcs:
        und[u] |= 1 << v
        und[v] |= 1 << u
    # reach2[u]: vertices reachable by a walk of length >= 2
    reach1 = adj[:]
    changed = True
    while changed:
        changed = False
        for u in range(n):
            r = reach1[u]
            acc = r
            x = r
            while x:
                low = x & -x
                acc |= reach1[low.bit_length() - 1]
                x ^= low
            if acc != r:
                reach1[u] = acc
                changed = True
    for u in range(n):
        if reach1[u] >> u & 1:
            return True
        two = 0
        x = adj[u]
        while x:
            low = x & -x
            two |= reach1[low.bit_length() - 1]
            x ^= low
        if two & und[u]:
            return True
    return False


def _enumerate_pruned(g: SimpleGraph, keep: bool):
    n = g.n
    edges = _edge_order(g)
    nbr = [0] * n
    for u, v in g.edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    reach = [0] * n  # reach[x]: vertices reachable from x by >= 1 arcs
    arcs: list[tuple[int, int]] = []
    found: list[tuple[tuple[int, int], ...]] = []
    count = 0
    nodes = 0

    def add(u: int, w: int) -> list[int] | None:
        """Add arc u->w; return the old reach vector, or None on violation."""
        if reach[w] >> u & 1:
            return None
        X = 1 << u
        for x in range(n):
            if reach[x] >> u & 1:
                X |= 1 << x
        Y = (1 << w) | reach[w]
        x = X
        while x:
            low = x & -x
            xi = low.bit_length() - 1
            hit = nbr[xi] & Y
            if xi == u:
                hit &= ~(1 << w)
            if hit:
                return None
            x ^= low
        old = reach[:]
        x = X
        while x:
            low = x & -x
            reach[low.bit_length() - 1] |= Y
            x ^= low
        return old

    def rec(i: int) -> None:
        nonlocal count, nodes, reach
        nodes += 1
        if i == len(edges):
            count += 1
            if keep:
                found.append(tuple(arcs))
            return
        u, w = edges[i]
        for a, b in ((u, w), (w, u)):
            old = add(a, b)
            if old is None:
                continue
            arcs.append((a, b))
            rec(i + 1)
            arcs.pop()
            reach = old

    rec(0)
    return count, found, nodes


def _edge_order(g: SimpleGraph) -> list[tuple[int, int]]:
    # BFS edge order keeps constrained edges close together, which prunes early
    adj = g.adjacency()
    order: list[tuple[int, int]] = []
    seen_e: set[tuple[int, int]] = set()
    seen_v = [False] * g.n
    for s in range(g.n):
        if seen_v[s]:
            continue
        seen_v[s] = True
        queue = [s]
        while queue:
            u = queue.pop(0)
            for v in sorted(adj[u]):
                e = (min(u, v), max(u, v))
                if e not in seen_e:
                    seen_e.add(e)
                    order.append(e)
                if not seen_v[v]:
                    seen_v[v] = True
                    queue.append(v)
    return order


def _enumerate_all(g: SimpleGraph, keep: bool):
    edges = g.sorted_edges()
    count = 0
    found = []
    for bits in range(1 << len(edges)):
        arcs = tuple((u, v) if bits >> i & 1 == 0 else (v, u) for i, (u, v) in enumerate(edges))
        if not violates(Digraph(g.n, frozenset(arcs))):
            count += 1
            if keep:
                found.append(arcs)
    return count, found, 1 << len(edges)


def _group(digraphs: list[Digraph]) -> list[Digraph]:
    import networkx as nx
    from networkx.algorithms.isomorphism import DiGraphMatcher

    buckets: dict[str, list] = {}
    reps: list[Digraph] = []
    for d in digraphs:
        nxd = d.to_networkx()
        key = nx.weisfeiler_lehman_graph_hash(nxd)
        bucket = buckets.setdefault(key, [])
        if any(DiGraphMatcher(other, nxd).is_isomorphic() for other, _ in bucket):
            continue
        bucket.append((nxd, d))
        reps.append(d)
    return reps


def orientation_feasible(g: SimpleGraph, edge_cap: int = DEFAULT_EDGE_CAP, prune: bool = True,
                         group_limit: int = 20000) -> OrientationReport:
    """Count orientations with no directed path (>= 3 vertices) joining adjacent ends.

    Survivors are grouped up to digraph isomorphism when there are at most
    ``group_limit`` of them.
    """
    if g.m > edge_cap:
        raise TooManyEdges(f"{g.m} edges exceeds the cap of {edge_cap}")
    run = _enumerate_pruned if prune else _enumerate_all
    count, found, visited = run(g, keep=True)
    digraphs = [Digraph(g.n, frozenset(a)) for a in found[: group_limit + 1]]
    classes = _group(digraphs) if count <= group_limit else None
    return OrientationReport(g, 1 << g.m, count, classes, visited, digraphs if count <= group_limit else [])
