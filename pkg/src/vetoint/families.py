"""Named graphs and explicit representations of the constructive families.

Each ``*_family_rep`` builder returns a representation whose graph under the
matching semantics is the named target graph (``target_graph`` gives it with
the same vertex labels). Where a printed formula fails that check the builder
uses a verified replacement; see ``ERRATA``.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Sequence

from .errors import BadParameters, UnsupportedFamily
from .model import MIDPOINT, UNIT, MarkedInterval, Representation, SimpleGraph, perturb_distinct

F = Fraction

# Grötzsch labels a..k -> 0..10: outer 5-cycle a-b-c-d-e, shadows f..j of a..e,
# hub k adjacent to every shadow.
GROTZSCH_LABELS = "abcdefghijk"

# Transcription notes for formulas that needed a reading or a repair; each
# entry's builder is checked against its target graph in the tests.
ERRATA: dict[str, str] = {
    "da-cycle": "middle term printed as '2i+n. 2i+n+3'; read as (i, 2i+n, 2i+n+3), which gives C_n for all tested n",
    "sa-cycle": "v_i's mark coincides with v_{i+2}'s left end; correct under the set-based reading, "
                "and the default output is perturbed to distinct points",
    "sa-wheel": "inherits the shared points of sa-cycle; perturbed the same way",
}


def _graph(n: int, edges) -> SimpleGraph:
    return SimpleGraph(n, frozenset(edges))


# --- stock graphs ---------------------------------------------------------------------


def complete(n: int) -> SimpleGraph:
    return _graph(n, combinations(range(n), 2))


def cycle(n: int) -> SimpleGraph:
    if n < 3:
        raise BadParameters("a cycle needs at least 3 vertices")
    return _graph(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> SimpleGraph:
    return _graph(n, ((i, i + 1) for i in range(n - 1)))


def star(leaves: int) -> SimpleGraph:
    return _graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def wheel(n: int) -> SimpleGraph:
    """``W_n``: the cycle ``0..n-1`` plus hub ``n``."""
    if n < 3:
        raise BadParameters("a wheel needs a rim of at least 3 vertices")
    return _graph(n + 1, list(cycle(n).edges) + [(i, n) for i in range(n)])


def complete_multipartite(parts: Sequence[int]) -> SimpleGraph:
    if any(p < 1 for p in parts):
        raise BadParameters("part sizes must be positive")
    label = [i for i, p in enumerate(parts) for _ in range(p)]
    n = len(label)
    return _graph(n, ((u, v) for u, v in combinations(range(n), 2) if label[u] != label[v]))


def complete_bipartite(m: int, n: int) -> SimpleGraph:
    return complete_multipartite([m, n])


def tree(parents: Sequence[int]) -> SimpleGraph:
    """Tree from a parent array; ``parents[0]`` is ignored (root 0), other
    entries must point to smaller indices."""
    n = len(parents)
    edges = []
    for v in range(1, n):
        p = parents[v]
        if not 0 <= p < v:
            raise BadParameters(f"parent of {v} must be an earlier vertex, got {p}")
        edges.append((p, v))
    return _graph(n, edges)


def caterpillar(legs: Sequence[int]) -> SimpleGraph:
    """Spine ``0..k-1`` in order, then ``legs[i]`` pendant vertices on spine vertex ``i``."""
    return tree(caterpillar_parents(legs))


def caterpillar_parents(legs: Sequence[int]) -> list[int]:
    k = len(legs)
    if k < 1 or any(x < 0 for x in legs):
        raise BadParameters("caterpillar needs a nonempty spine and nonnegative leg counts")
    parents = [0] + list(range(k - 1))
    for i, c in enumerate(legs):
        parents += [i] * c
    return parents


def star_subdivided(d: int) -> SimpleGraph:
    """Star ``S_d`` with each edge subdivided: centre 0, middles 1..d, tips d+1..2d."""
    if d < 1:
        raise BadParameters("d must be positive")
    return _graph(2 * d + 1, [(0, i) for i in range(1, d + 1)] + [(i, i + d) for i in range(1, d + 1)])


def grotzsch() -> SimpleGraph:
    a, b, c, d, e, f, g, h, i, j, k = range(11)
    outer = [(a, b), (b, c), (c, d), (d, e), (e, a)]
    # shadow x' of x is adjacent to the outer neighbours of x
    shadows = [(f, b), (f, e), (g, a), (g, c), (h, b), (h, d), (i, c), (i, e), (j, d), (j, a)]
    hub = [(x, k) for x in (f, g, h, i, j)]
    return _graph(11, outer + shadows + hub)


def lobster5() -> SimpleGraph:
    """The 5-lobster: centre 0, middles 1..5, tips 6..10."""
    return star_subdivided(5)


def g_k(k: int) -> SimpleGraph:
    """Hub 0, ``a_1..a_k`` = 1..k, then one connector per pair ``i < j``."""
    if k < 1:
        raise BadParameters("k must be positive")
    edges = [(0, i) for i in range(1, k + 1)]
    nxt = k + 1
    for i, j in combinations(range(1, k + 1), 2):
        edges += [(i, nxt), (j, nxt)]
        nxt += 1
    assert nxt == 1 + k + comb(k, 2)
    return _graph(nxt, edges)


def circulant(n: int, jumps: Sequence[int]) -> SimpleGraph:
    if n < 1 or any(not 0 < s < n for s in jumps):
        raise BadParameters("circulant jumps must lie in 1..n-1")
    return _graph(n, {(min(i, (i + s) % n), max(i, (i + s) % n)) for i in range(n) for s in jumps})


NAMED = {
    "complete": complete,
    "cycle": cycle,
    "path": path,
    "star": star,
    "wheel": wheel,
    "complete-multipartite": complete_multipartite,
    "complete-bipartite": complete_bipartite,
    "tree": tree,
    "caterpillar": caterpillar,
    "grotzsch": grotzsch,
    "lobster5": lobster5,
    "star-subdivided": star_subdivided,
    "g-k": g_k,
    "circulant": circulant,
}


def named_graph(name: str, *args) -> SimpleGraph:
    try:
        builder = NAMED[name.replace("_", "-")]
    except KeyError:
        raise BadParameters(f"unknown graph name {name!r}") from None
    try:
        return builder(*args)
    except TypeError as exc:
        raise BadParameters(f"bad parameters for {name}: {exc}") from exc


# --- veto interval families -------------------------------------------------------------


def _rep(tuples, flavor=()) -> Representation:
    return Representation.from_tuples(tuples, flavor)


def vi_complete_bipartite(m: int, n: int, distinct: bool = True) -> Representation:
    """``m`` copies of ``(0,2,4)`` and ``n`` of ``(3,5,7)``; ``distinct`` separates the copies."""
    if m < 1 or n < 1:
        raise UnsupportedFamily("K_{m,n} needs m, n >= 1")
    rep = _rep([(0, 2, 4)] * m + [(3, 5, 7)] * n, {UNIT, MIDPOINT})
    return perturb_distinct(rep) if distinct else rep


def vi_tree(parents: Sequence[int]) -> Representation:
    """Add leaves one by one: a new leaf of ``v`` straddles ``v_r`` with its
    mark just past it, squeezed between the neighbouring marked points."""
    n = len(parents)
    if n == 0:
        raise UnsupportedFamily("empty tree")
    tree(parents)  # validates
    ivs: list[MarkedInterval] = [MarkedInterval.of(0, 1, 2)]
    for a in range(1, n):
        v = ivs[parents[a]]
        pts = sorted(p for iv in ivs for p in iv.points)
        left = max((p for p in pts if p < v.right), default=v.right - 1)
        right = min((p for p in pts if p > v.right), default=v.right + 1)
        a_l = (left + v.right) / 2
        a_v = v.right + (right - v.right) / 3
        a_r = v.right + 2 * (right - v.right) / 3
        ivs.append(MarkedInterval(a_l, (a_v,), a_r))
    return Representation(tuple(ivs), 1)


def muvi_caterpillar(legs: Sequence[int], distinct: bool = True) -> Representation:
    """Spine ``s_i = (2i-1, 2i, 2i+1)``; a leg on ``s_i`` is ``s_{i-1}`` shifted by ``i/(k+1)``.

    Consecutive spine intervals touch at a point (adjacent under the set
    reading); ties are removed by the final perturbation.
    """
    k = len(legs)
    caterpillar_parents(legs)
    tuples = [(2 * i - 1, 2 * i, 2 * i + 1) for i in range(1, k + 1)]
    for i, c in enumerate(legs, start=1):
        t = F(i, k + 1)
        tuples += [(2 * i - 3 + t, 2 * i - 2 + t, 2 * i - 1 + t)] * c
    rep = _rep(tuples, {UNIT, MIDPOINT})
    return perturb_distinct(rep) if distinct else rep


def muvi_cycle(n: int, distinct: bool = True) -> Representation:
    """Vertex ``i`` (0-based) is ``v_{i+1}``; intervals of length 24 with centred marks."""
    if n < 4:
        raise UnsupportedFamily("C_n is a VI graph only for n >= 4")
    iv = {}
    if n % 2:
        for k in range(1, (n + 1) // 2 + 1):
            iv[k] = (20 * k - 18, 20 * k - 6, 20 * k + 6)
        iv[(n + 3) // 2] = (10 * n - 22, 10 * n - 10, 10 * n + 2)
        lo = (n + 5) // 2
    else:
        for k in range(1, n // 2 + 1):
            iv[k] = (20 * k - 18, 20 * k - 6, 20 * k + 6)
        iv[(n + 2) // 2] = (10 * n - 4, 10 * n + 8, 10 * n + 20)
        lo = (n + 4) // 2
    for i in range(lo, n):
        iv[i] = (20 * (n - i) + 12, 20 * (n - i) + 24, 20 * (n - i) + 36)
    iv[n] = (15, 27, 39)
    rep = _rep([iv[i] for i in range(1, n + 1)], {UNIT, MIDPOINT})
    return perturb_distinct(rep) if distinct else rep


def vi_family_rep(name: str, *args) -> Representation:
    builders = {
        "complete-bipartite": vi_complete_bipartite,
        "tree": vi_tree,
        "caterpillar": muvi_caterpillar,
        "cycle": muvi_cycle,
    }
    if name not in builders:
        raise UnsupportedFamily(f"no veto interval construction for {name!r}")
    return builders[name](*args)


# --- single approval families ------------------------------------------------------------


def sa_complete(n: int) -> Representation:
    if n < 1:
        raise UnsupportedFamily("K_n needs n >= 1")
    return _rep([(-2 * i, -2 * i + 1, 2 * i) for i in range(1, n + 1)])


def zigzag_labels(n: int) -> list[int]:
    """Standard cycle vertex carrying the zig-zag label ``v_i`` (index ``i-1``).

    ``v_1, v_2`` adjacent, ``v_3`` the other neighbour of ``v_1``, ``v_4`` of
    ``v_2``, and so on; on the cycle ``0..n-1`` this reads 0, 1, n-1, 2, n-2, ...
    """
    out = []
    for i in range(1, n + 1):
        if i == 1:
            out.append(0)
        elif i % 2 == 0:
            out.append(i // 2)
        else:
            out.append(n - (i - 1) // 2)
    return out


def _sa_cycle_tuples(n: int) -> list[tuple]:
    """Intervals for ``C_n`` indexed by standard cycle vertex."""
    by_label = {1: (2, 6, 7), n: (2 * n, 2 * n + 6, 2 * n + 7)}
    for i in range(2, n):
        by_label[i] = (2 * i, 2 * i + 4, 2 * i + 7)
    labels = zigzag_labels(n)
    out: list = [None] * n
    for i in range(1, n + 1):
        out[labels[i - 1]] = by_label[i]
    return out


def sa_cycle(n: int, distinct: bool = True) -> Representation:
    """The raw formula shares endpoints (``v_{i+2}`` starts at ``v_i``'s mark);
    ``distinct`` resolves those ties without changing the graph."""
    if n < 3:
        raise UnsupportedFamily("C_n needs n >= 3")
    rep = _rep(_sa_cycle_tuples(n))
    return perturb_distinct(rep) if distinct else rep


def sa_wheel(n: int, distinct: bool = True) -> Representation:
    if n < 3:
        raise UnsupportedFamily("W_n needs n >= 3")
    rep = _rep(_sa_cycle_tuples(n) + [(2, 2 * n + 8, 2 * n + 10)])
    return perturb_distinct(rep) if distinct else rep


def sa_k_partite(parts: Sequence[int]) -> Representation:
    """The ``b``-th vertex (1-based) of a part of size ``c`` gets ``(a, n+2a-b, n+2a-b+c)``."""
    if not parts or any(p < 1 for p in parts):
        raise UnsupportedFamily("part sizes must be positive")
    n = sum(parts)
    tuples = []
    a = 0
    for c in parts:
        for b in range(1, c + 1):
            a += 1
            tuples.append((a, n + 2 * a - b, n + 2 * a - b + c))
    return _rep(tuples)


def _bfs_levels(parents: Sequence[int]) -> tuple[list[int], list[int], list[list[int]]]:
    """BFS order from root 0, depth of each vertex, and children lists."""
    n = len(parents)
    children: list[list[int]] = [[] for _ in range(n)]
    for v in range(1, n):
        children[parents[v]].append(v)
    level = [0] * n
    order = []
    queue = deque([0])
    while queue:
        u = queue.popleft()
        order.append(u)
        for c in children[u]:
            level[c] = level[u] + 1
            queue.append(c)
    return order, level, children


def sa_tree(parents: Sequence[int]) -> Representation:
    """Level-by-level construction rooted at vertex 0.

    A vertex ``v`` with parent ``p`` starts just left of ``p``'s mark, puts its
    mark just right of ``p_r``, and ends in ``(M+1, M+2)`` where ``M`` is the
    largest right end of the earlier levels; right ends within a level follow
    the order of the marks.
    """
    n = len(parents)
    if n == 0:
        raise UnsupportedFamily("empty tree")
    tree(parents)
    order, level, _ = _bfs_levels(parents)
    L: dict[int, Fraction] = {0: F(0)}
    A: dict[int, Fraction] = {0: F(1)}
    R: dict[int, Fraction] = {0: F(2)}
    depth = max(level)
    for lev in range(1, depth + 1):
        members = [v for v in order if level[v] == lev]
        M = max(R[v] for v in R if level[v] < lev)
        for v in members:
            p = parents[v]
            pts = sorted(list(L.values()) + list(A.values()) + list(R.values()))
            before = max((x for x in pts if x < A[p]), default=A[p] - 1)
            after = min([x for x in pts if x > R[p]] + [R[p] + 1])
            L[v] = (before + A[p]) / 2
            A[v] = (R[p] + after) / 2
        ranked = sorted(members, key=lambda v: A[v])
        for r, v in enumerate(ranked, start=1):
            R[v] = M + 1 + F(r, len(ranked) + 1)
    return _rep([(L[v], A[v], R[v]) for v in range(n)])


def sa_family_rep(name: str, *args) -> Representation:
    builders = {
        "complete": sa_complete,
        "cycle": sa_cycle,
        "wheel": sa_wheel,
        "tree": sa_tree,
        "k-partite": sa_k_partite,
    }
    if name not in builders:
        raise UnsupportedFamily(f"no single approval construction for {name!r}")
    return builders[name](*args)


# --- double approval families ------------------------------------------------------------


def da_complete(n: int) -> Representation:
    if n < 1:
        raise UnsupportedFamily("K_n needs n >= 1")
    return _rep([(i, i + n, i + 2 * n) for i in range(1, n + 1)])


def _da_cycle_tuples(n: int) -> list[tuple]:
    # the printed formula reads "(i, 2i+n. 2i+n+3)"; the period is taken as a comma
    tuples = [(i, 2 * i + n, 2 * i + n + 3) for i in range(1, n - 2)]
    tuples += [(-2, 3 * n - 4, 3 * n - 2), (-1, 0, 3 * n - 1), (-3, n + 1, n + 3)]
    return tuples


def da_cycle(n: int) -> Representation:
    if n < 3:
        raise UnsupportedFamily("C_n needs n >= 3")
    return _rep(_da_cycle_tuples(n))


def da_wheel(n: int) -> Representation:
    """Rim ``0..n-1``, hub ``n``."""
    if n < 3:
        raise UnsupportedFamily("W_n needs n >= 3")
    return _rep(_da_cycle_tuples(n) + [(-4, n, 3 * n)])


def _da_bipartite_tuples(m: int, n: int) -> list[tuple]:
    vs = [(2 * i, 2 * m + 2 * n + 2 * i, 2 * m + 2 * n + 2 * i + 1) for i in range(1, m + 1)]
    ws = [(2 * m + 2 * i, 2 * m + 2 * i + 1, 4 * m + 2 * n + 2 * i) for i in range(1, n + 1)]
    return vs + ws


def da_complete_bipartite(m: int, n: int) -> Representation:
    if m < 1 or n < 1:
        raise UnsupportedFamily("K_{m,n} needs m, n >= 1")
    return _rep(_da_bipartite_tuples(m, n))


def da_k1bc(b: int, c: int) -> Representation:
    """``K_{1,b,c}``: the ``K_{b,c}`` intervals, then the apex as the last vertex."""
    if b < 1 or c < 1:
        raise UnsupportedFamily("K_{1,b,c} needs b, c >= 1")
    apex = (1, 2 * b + 2 * c + F(3, 2), 4 * b + 4 * c + 1)
    return _rep(_da_bipartite_tuples(b, c) + [apex])


def da_tree(parents: Sequence[int]) -> Representation:
    """Root ``(0, k+1, 3k+2)`` with children ``(i, k+2i, k+2i+1)``; deeper
    children of ``x`` go in a mark-free window ``(x_a - d, x_a + d)``."""
    n = len(parents)
    if n == 0:
        raise UnsupportedFamily("empty tree")
    tree(parents)
    order, level, children = _bfs_levels(parents)
    ivs: dict[int, tuple] = {}
    kids = children[0]
    k = len(kids)
    if k == 0:
        return _rep([(0, 1, 2)])
    ivs[0] = (F(0), F(k + 1), F(3 * k + 2))
    for i, v in enumerate(kids, start=1):
        ivs[v] = (F(i), F(k + 2 * i), F(k + 2 * i + 1))
    for lev in range(1, max(level)):
        parents_here = [x for x in order if level[x] == lev and children[x]]
        pts = sorted(p for t in ivs.values() for p in t)
        windows = {}
        for x in parents_here:
            xa = ivs[x][1]
            d = min(abs(p - xa) for p in pts if p != xa) / 2
            windows[x] = (xa, d)
        for x in parents_here:
            xa, d = windows[x]
            j = len(children[x])
            for i, y in enumerate(children[x], start=1):
                ivs[y] = (xa - d + F(i) * d / (2 * j), xa + F(i) * d / (2 * j), xa + F(2 * i + 1) * d / (4 * j))
    return perturb_distinct(_rep([ivs[v] for v in range(n)]))


def da_family_rep(name: str, *args) -> Representation:
    builders = {
        "complete": da_complete,
        "cycle": da_cycle,
        "wheel": da_wheel,
        "complete-bipartite": da_complete_bipartite,
        "tree": da_tree,
        "k1bc": da_k1bc,
    }
    if name not in builders:
        raise UnsupportedFamily(f"no double approval construction for {name!r}")
    return builders[name](*args)


def target_graph(kind: str, name: str, *args) -> SimpleGraph:
    """The graph a family builder is meant to produce, with matching labels."""
    if name == "k-partite":
        return complete_multipartite(args[0])
    if name == "k1bc":
        b, c = args
        g = complete_bipartite(b, c)
        apex = b + c
        return SimpleGraph(apex + 1, g.edges | {(v, apex) for v in range(apex)})
    if kind == "vi" and name == "caterpillar":
        return caterpillar(*args)
    return named_graph(name, *args)
