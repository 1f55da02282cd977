from __future__ import annotations

import random
from itertools import combinations

import networkx as nx
import pytest

from oracles import graphs_by_brute_force, interleavings
from vetoint import families as fam
from vetoint.analysis import is_triangle_free
from vetoint.generators import random_midpoint_unit_rep, random_rep, random_unit_rep
from vetoint.model import MIDPOINT, PROPER, UNIT, SimpleGraph, flavor_flags
from vetoint.recognize import Budget, Verdict, orientation_feasible, recognize
from vetoint.semantics import SemanticsTag as T
from vetoint.semantics import build_graph

TAGS = {"veto": T.VETO, "interval": T.INTERVAL, "point-core": T.POINT_CORE,
        "single-approval": T.SINGLE_APPROVAL, "double-approval": T.DOUBLE_APPROVAL}


def labelled_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield SimpleGraph(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))


def atlas(max_nodes: int):
    for G in nx.graph_atlas_g()[1:]:
        if G.number_of_nodes() > max_nodes:
            break
        yield SimpleGraph(G.number_of_nodes(), frozenset(tuple(sorted(e)) for e in G.edges()))


def _lp_keep(flavor):
    """Float oracle on a vertex sequence: is the word realisable with the flavor?"""
    import numpy as np
    from scipy.optimize import linprog

    def keep(word):
        n = max(word) + 1
        seen = [0] * n
        cols = []
        for v in word:
            cols.append(3 * v + seen[v])
            seen[v] += 1
        nv = 3 * n + 1
        A_ub = []
        for p, q in zip(cols, cols[1:]):
            row = np.zeros(nv)
            row[p], row[q], row[-1] = 1, -1, 1
            A_ub.append(row)
        A_eq, b_eq = [], []
        for v in range(n):
            if UNIT in flavor:
                row = np.zeros(nv)
                row[3 * v + 2], row[3 * v] = 1, -1
                A_eq.append(row)
                b_eq.append(1)
            if MIDPOINT in flavor:
                row = np.zeros(nv)
                row[3 * v + 2], row[3 * v + 1], row[3 * v] = 1, -2, 1
                A_eq.append(row)
                b_eq.append(0)
        c = np.zeros(nv)
        c[-1] = -1
        res = linprog(c, A_ub=A_ub, b_ub=np.zeros(len(A_ub)), A_eq=A_eq or None, b_eq=b_eq or None,
                      bounds=[(None, None)] * (nv - 1) + [(None, 1)], method="highs")
        return res.status == 0 and -res.fun > 1e-9

    return keep


@pytest.fixture(scope="module")
def brute4():
    return graphs_by_brute_force(4)


class TestSmall:
    def test_triangle_is_not_veto(self):
        assert recognize(fam.complete(3), T.VETO).verdict is Verdict.NO

    def test_c4_is_veto(self):
        res = recognize(fam.cycle(4), T.VETO)
        assert res.yes and build_graph(res.witness, T.VETO) == fam.cycle(4)

    def test_caterpillar_is_muvi(self):
        g = fam.caterpillar([2, 0, 1, 3])
        res = recognize(g, T.VETO, {UNIT, MIDPOINT})
        assert res.yes
        assert {UNIT, MIDPOINT} <= flavor_flags(res.witness)
        assert build_graph(res.witness, T.VETO) == g

    def test_double_veto(self):
        assert recognize(fam.complete(3), T.K_VETO, k=2).verdict is Verdict.NO
        res = recognize(fam.cycle(4), T.K_VETO, k=2)
        assert res.yes and res.witness.mark_count == 2
        assert build_graph(res.witness, T.K_VETO) == fam.cycle(4)

    def test_empty_graph(self):
        assert recognize(SimpleGraph(0, frozenset()), T.VETO).yes

    def test_node_budget_times_out(self):
        res = recognize(fam.cycle(5), T.VETO, budget=Budget(seconds=None, nodes=1))
        assert res.verdict is Verdict.TIMEOUT and res.witness is None

    def test_deterministic(self):
        g = fam.wheel(5)
        a = recognize(g, T.SINGLE_APPROVAL)
        b = recognize(g, T.SINGLE_APPROVAL)
        assert a.word == b.word and a.witness == b.witness


@pytest.mark.parametrize("name", list(TAGS))
def test_all_four_vertex_graphs_match_brute_force(name, brute4):
    tag = TAGS[name]
    for g in labelled_graphs(4):
        res = recognize(g, tag)
        assert res.verdict is not Verdict.TIMEOUT
        assert res.yes == (g.edges in brute4[name]), (name, sorted(g.edges))
        if res.yes:
            assert build_graph(res.witness, tag) == g


@pytest.mark.parametrize("flavor", [{UNIT}, {MIDPOINT}, {UNIT, MIDPOINT}])
def test_flavoured_three_vertex_graphs_match_brute_force(flavor):
    reach = graphs_by_brute_force(3, keep=_lp_keep(flavor))
    for name in ("veto", "single-approval", "double-approval"):
        for g in labelled_graphs(3):
            res = recognize(g, TAGS[name], flavor)
            assert res.yes == (g.edges in reach[name]), (name, sorted(g.edges))
            if res.yes:
                assert set(flavor) <= flavor_flags(res.witness)


def test_proper_flavor_equals_unit_on_three_vertices():
    for g in labelled_graphs(3):
        for tag in (T.VETO, T.SINGLE_APPROVAL):
            assert recognize(g, tag, {PROPER}).yes == recognize(g, tag, {UNIT}).yes


@pytest.mark.parametrize("options", [{"use_symmetry": False}, {"use_swap": False},
                                     {"use_symmetry": False, "use_swap": False}, {"prefix_check_every": 3},
                                     {"split_components": False}])
def test_pruning_does_not_change_verdicts(options):
    for g in atlas(5):
        for tag, flavor in ((T.VETO, ()), (T.VETO, (UNIT,)), (T.SINGLE_APPROVAL, ())):
            assert recognize(g, tag, flavor, **options).yes == recognize(g, tag, flavor).yes


def test_disconnected_witness_is_merged():
    g = SimpleGraph(7, frozenset({(0, 4), (4, 2), (2, 6), (6, 0), (1, 5)}))
    for flavor in ((), (UNIT,), (UNIT, MIDPOINT)):
        res = recognize(g, T.VETO, flavor)
        assert res.yes and build_graph(res.witness, T.VETO) == g
        assert set(flavor) <= flavor_flags(res.witness)
    assert not recognize(SimpleGraph(6, frozenset({(0, 1), (1, 2), (0, 2), (3, 4)})), T.VETO).yes


def test_midpoint_only_search_without_splitting_agrees():
    for g in atlas(5):
        assert (recognize(g, T.VETO, {MIDPOINT}, split_components=False).yes
                == recognize(g, T.VETO, {MIDPOINT}).yes)


def test_generated_representations_are_recognised():
    rng = random.Random(11)
    for _ in range(15):
        rep = random_rep(rng, rng.randint(2, 6))
        for tag in (T.VETO, T.DOUBLE_APPROVAL, T.SINGLE_APPROVAL):
            assert recognize(build_graph(rep, tag), tag).yes
        assert recognize(build_graph(random_unit_rep(rng, rng.randint(2, 6)), T.VETO), T.VETO, {UNIT}).yes
        g = build_graph(random_midpoint_unit_rep(rng, rng.randint(2, 6)), T.VETO)
        assert recognize(g, T.VETO, {UNIT, MIDPOINT}).yes


def test_class_monotonicity_and_orientation_consistency_on_atlas():
    for g in atlas(6):
        muvi = recognize(g, T.VETO, {UNIT, MIDPOINT}).yes
        uvi = recognize(g, T.VETO, {UNIT}).yes
        mvi = recognize(g, T.VETO, {MIDPOINT}).yes
        vi = recognize(g, T.VETO).yes
        assert (not muvi or uvi) and (not uvi or vi) and (not mvi or vi) and (not muvi or mvi)
        if g.m <= 15 and orientation_feasible(g).feasible == 0:
            assert not vi
        if vi:
            assert is_triangle_free(g)
