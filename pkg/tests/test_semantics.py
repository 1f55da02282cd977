from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import approval_count, graph_edges, veto_adjacent
from vetoint.analysis import is_triangle_free
from vetoint.errors import ArityMismatch, TiedPoints
from vetoint.generators import random_midpoint_unit_rep, random_rep
from vetoint.model import MarkedInterval, Representation, perturb_distinct
from vetoint.semantics import SemanticsTag as T
from vetoint.semantics import (
    adjacent,
    build_digraph,
    build_graph,
    interval_graph,
    interval_to_single_approval,
    partition_check,
    reduce_to_double,
    split_to_k_veto,
    strict_adjacent,
)

R = Representation.from_tuples
I = MarkedInterval.of


class TestAdjacent:
    def test_k11_veto(self):
        assert adjacent(I(0, 2, 4), I(3, 5, 7), T.VETO)

    def test_contained_not_adjacent(self):
        assert not adjacent(I(0, 2, 4), I(1, 2.5, 3), T.VETO)

    def test_single_approval_complete(self):
        assert adjacent(I(-2, -1, 2), I(-4, -3, 4), T.SINGLE_APPROVAL)

    def test_double_approval_complete(self):
        assert adjacent(I(1, 6, 11), I(2, 7, 12), T.DOUBLE_APPROVAL)

    @pytest.mark.parametrize("tag", [t for t in T if t is not T.VETO_DIRECTED and t.accepts(1)])
    def test_disjoint_never_adjacent(self, tag):
        assert not adjacent(I(0, 1, 2), I(3, 4, 5), tag)

    def test_arity(self):
        with pytest.raises(ArityMismatch):
            adjacent(I(0, 1, 2), I(3, 4, 5), T.K_VETO)
        with pytest.raises(ArityMismatch):
            adjacent(I(0, 1, 2, 3), I(3, 4, 5, 6), T.VETO)

    def test_shared_endpoint_is_adjacent(self):
        # touching at a single point that is no mark: intersection {2} is nonempty and mark-free
        assert adjacent(I(0, 1, 2), I(2, 3, 4), T.VETO)

    def test_symmetry(self):
        rng = random.Random(0)
        for _ in range(300):
            rep = random_rep(rng, 2)
            a, b = rep.intervals
            for tag in (T.VETO, T.INTERVAL, T.POINT_CORE, T.SINGLE_APPROVAL, T.DOUBLE_APPROVAL):
                assert adjacent(a, b, tag) == adjacent(b, a, tag)


class TestBuildGraph:
    def test_k11(self):
        rep = R([(0, 2, 4), (3, 5, 7)])
        assert build_graph(rep, T.VETO).edges == {(0, 1)}
        assert build_graph(rep, T.POINT_CORE).edges == frozenset()

    @pytest.mark.parametrize("tag", [T.INTERVAL, T.VETO, T.POINT_CORE, T.SINGLE_APPROVAL, T.DOUBLE_APPROVAL])
    def test_single_interval(self, tag):
        g = build_graph(R([(0, 1, 2)]), tag)
        assert g.n == 1 and g.m == 0


class TestDigraph:
    def test_left_to_right(self):
        assert build_digraph(R([(0, 2, 4), (3, 5, 7)])).arcs == {(0, 1)}

    def test_relabelled(self):
        assert build_digraph(R([(3, 5, 7), (0, 2, 4)])).arcs == {(1, 0)}

    def test_ties_rejected(self):
        with pytest.raises(TiedPoints):
            build_digraph(R([(0, 1, 2), (2, 3, 4)]))

    def test_c5_witness_orientation_is_feasible(self):
        from vetoint.families import cycle
        from vetoint.recognize import orientation_feasible, recognize
        from networkx.algorithms.isomorphism import DiGraphMatcher

        res = recognize(cycle(5), T.VETO)
        d = build_digraph(res.witness)
        assert d.underlying() == cycle(5)
        classes = orientation_feasible(cycle(5)).classes
        assert any(DiGraphMatcher(c.to_networkx(), d.to_networkx()).is_isomorphic() for c in classes)

    def test_no_implied_paths(self):
        from oracles import has_long_implied_path

        rng = random.Random(1)
        for _ in range(300):
            rep = random_rep(rng, rng.randint(2, 6))
            d = build_digraph(rep)
            assert d.underlying() == build_graph(rep, T.VETO)
            assert not has_long_implied_path(rep.n, d.arcs)


class TestPartition:
    def test_k11(self):
        report = partition_check(R([(0, 2, 4), (3, 5, 7)]))
        assert report.holds
        assert report.counts() == {"interval": 1, "veto": 1, "point_core": 0, "single_approval": 0,
                                   "double_approval": 0}

    def test_empty(self):
        report = partition_check(Representation((), 1))
        assert report.holds and set(report.counts().values()) == {0}

    def test_midpoint_unit_has_no_single_approval(self):
        rng = random.Random(2)
        for _ in range(100):
            rep = random_midpoint_unit_rep(rng, rng.randint(1, 8))
            assert partition_check(rep).sa_edges == frozenset()


class TestReductions:
    def test_split_single(self):
        out = split_to_k_veto(R([(0, 2, 4)]), 2)
        (iv,) = out.intervals
        assert iv.left == 0 and iv.right == 4 and iv.k == 2
        # nearest other point is 2 away, so the marks sit at 2 -+ 1
        assert iv.marks == (Fraction(1), Fraction(3))

    def test_split_k11_keeps_edge(self):
        out = split_to_k_veto(R([(0, 2, 4), (3, 5, 7)]), 2)
        assert build_graph(out, T.K_VETO).edges == {(0, 1)}

    def test_split_identity_on_k2(self):
        rep = random_rep(random.Random(3), 5, k=2)
        assert build_graph(split_to_k_veto(rep, 2), T.K_VETO) == build_graph(rep, T.K_VETO)

    def test_reduce(self):
        assert reduce_to_double(R([(0, 1, 2, 3, 4)])).as_tuples() == [(0, 1, 3, 4)]
        rep = R([(0, 1, 2, 3)])
        assert reduce_to_double(rep) == rep

    def test_reduce_random_k4(self):
        rng = random.Random(4)
        for _ in range(50):
            rep = random_rep(rng, 5, k=4)
            assert build_graph(reduce_to_double(rep), T.K_VETO) == build_graph(rep, T.K_VETO)

    def test_interval_to_single_approval(self):
        assert build_graph(interval_to_single_approval([(0, 2), (1, 3)]), T.SINGLE_APPROVAL).edges == {(0, 1)}
        assert build_graph(interval_to_single_approval([(0, 1), (2, 3)]), T.SINGLE_APPROVAL).m == 0
        rng = random.Random(5)
        for _ in range(50):
            ends = rng.sample(range(100), 20)
            ivs = [tuple(sorted(ends[2 * i:2 * i + 2])) for i in range(10)]
            assert build_graph(interval_to_single_approval(ivs), T.SINGLE_APPROVAL) == interval_graph(ivs)

    def test_interval_to_single_approval_ties(self):
        with pytest.raises(TiedPoints):
            interval_to_single_approval([(0, 2), (2, 3)])


# --- properties against the independent oracle -----------------------------------------------

small = st.integers(min_value=0, max_value=12)


@st.composite
def reps(draw, k=1, max_n=6):
    n = draw(st.integers(min_value=0, max_value=max_n))
    if n == 0:
        return Representation((), k)
    point_sets = [draw(st.lists(small, min_size=k + 2, max_size=k + 2, unique=True)) for _ in range(n)]
    return R([tuple(sorted(p)) for p in point_sets])


@settings(max_examples=300, deadline=None)
@given(reps())
def test_set_based_predicates_match_oracle(rep):
    tuples = rep.as_tuples()
    assert build_graph(rep, T.VETO).edges == graph_edges(tuples, veto_adjacent)
    counts = {
        T.POINT_CORE: lambda c: c is not None and c >= 1,
        T.SINGLE_APPROVAL: lambda c: c == 1,
        T.DOUBLE_APPROVAL: lambda c: c == 2,
        T.INTERVAL: lambda c: c is not None,
    }
    for tag, test in counts.items():
        assert build_graph(rep, tag).edges == graph_edges(tuples, lambda a, b: test(approval_count(a, b)))


@settings(max_examples=300, deadline=None)
@given(reps())
def test_strict_forms_agree_on_distinct_points(rep):
    rep = perturb_distinct(rep)
    for a, b in combinations(rep.intervals, 2):
        for tag in (T.VETO, T.POINT_CORE, T.SINGLE_APPROVAL, T.DOUBLE_APPROVAL):
            assert strict_adjacent(a, b, tag) == adjacent(a, b, tag)


@settings(max_examples=300, deadline=None)
@given(reps())
def test_veto_graph_triangle_free_and_containment(rep):
    g = build_graph(rep, T.VETO)
    assert is_triangle_free(g)
    for i, j in permutations(range(rep.n), 2):
        a, b = rep.intervals[i], rep.intervals[j]
        if a.left <= b.left and b.right <= a.right:
            assert not g.has_edge(i, j)


@settings(max_examples=200, deadline=None)
@given(reps(k=2))
def test_k_veto_triangle_free(rep):
    assert is_triangle_free(build_graph(rep, T.K_VETO))


@settings(max_examples=200, deadline=None)
@given(reps(max_n=5), st.data())
def test_deletion_commutes(rep, data):
    if rep.n == 0:
        return
    i = data.draw(st.integers(min_value=0, max_value=rep.n - 1))
    for tag in (T.VETO, T.INTERVAL, T.SINGLE_APPROVAL, T.DOUBLE_APPROVAL):
        assert build_graph(rep.delete(i), tag) == build_graph(rep, tag).delete(i)


@settings(max_examples=200, deadline=None)
@given(reps(), st.fractions(min_value=-3, max_value=3), st.fractions(min_value=Fraction(1, 5), max_value=5))
def test_partition_holds_and_builders_scale_invariant(rep, shift, scale):
    rep = perturb_distinct(rep)
    assert partition_check(rep).holds
    moved = rep.mapped(lambda x: x * scale + shift)
    assert partition_check(moved) == partition_check(rep)
