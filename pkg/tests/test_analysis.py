from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import greedy_is_k_colorable
from vetoint import families as fam
from vetoint.analysis import (
    chromatic_number,
    is_triangle_free,
    mpvi_order_check,
    muda_to_unit_interval,
    proper_to_unit,
    unit_interval_to_muda,
    uvi_four_color,
)
from vetoint.errors import NotMidpointUnit, NotProper, NotUnit, NotUnitIntervals, TooLarge
from vetoint.generators import random_midpoint_proper_rep, random_proper_rep, random_unit_rep
from vetoint.model import MIDPOINT, PROPER, UNIT, Representation, SimpleGraph, flavor_flags, ordering_word
from vetoint.semantics import SemanticsTag as T
from vetoint.semantics import build_graph, interval_graph

F = Fraction
R = Representation.from_tuples


class TestParityColoring:
    def test_named_colors(self):
        col = uvi_four_color(R([(1.2, 1.5, 2.2), (0.5, 1.1, 1.5)]))
        assert col.names() == ["red", "orange"]

    def test_muvi_cycle(self):
        rep = fam.muvi_cycle(9)
        col = uvi_four_color(rep)
        assert col.is_proper(fam.cycle(9)) and col.used <= 4

    def test_integer_points_are_shifted(self):
        rep = R([(0, F(1, 2), 1), (F(1, 2), 1, F(3, 2))])
        assert uvi_four_color(rep).is_proper(build_graph(rep, T.VETO))

    def test_not_unit(self):
        with pytest.raises(NotUnit):
            uvi_four_color(R([(0, 1, 2), (0, 1, 3)]))

    def test_random_unit_reps(self):
        rng = random.Random(8)
        for _ in range(200):
            rep = random_unit_rep(rng, rng.randint(1, 12), length=rng.choice([1, 3, F(7, 2)]))
            assert uvi_four_color(rep).is_proper(build_graph(rep, T.VETO))


class TestChromatic:
    @pytest.mark.parametrize("g,chi", [(fam.cycle(5), 3), (fam.cycle(6), 2), (fam.complete(5), 5),
                                       (fam.grotzsch(), 4), (fam.circulant(13, [1, 5]), 4),
                                       (SimpleGraph(3, frozenset()), 1), (SimpleGraph(0, frozenset()), 0)])
    def test_values(self, g, chi):
        cert = chromatic_number(g)
        assert cert.chi == chi and cert.verify(g)

    def test_refutation_certificate(self):
        cert = chromatic_number(fam.grotzsch())
        assert len(cert.clique) == 2 and cert.refuted == 3 and cert.refutation_nodes > 0
        assert not greedy_is_k_colorable(11, fam.grotzsch().edges, 3)

    def test_cap(self):
        with pytest.raises(TooLarge):
            chromatic_number(fam.complete(6), cap=5)

    def test_against_backtracking_oracle(self):
        rng = random.Random(9)
        for _ in range(60):
            n = rng.randint(1, 8)
            g = SimpleGraph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.45))
            chi = chromatic_number(g).chi
            assert greedy_is_k_colorable(n, g.edges, chi)
            assert chi == 1 or not greedy_is_k_colorable(n, g.edges, chi - 1)


def test_triangle_free():
    assert is_triangle_free(fam.cycle(4)) and is_triangle_free(fam.grotzsch())
    assert not is_triangle_free(fam.complete(3)) and not is_triangle_free(fam.wheel(5))
    assert is_triangle_free(SimpleGraph(0, frozenset()))


class TestProperToUnit:
    def test_example(self):
        rep = R([(0, 1, 3), (2, 4, 6)])
        out = proper_to_unit(rep)
        assert UNIT in flavor_flags(out)
        assert ordering_word(out) == ordering_word(rep)
        assert build_graph(out, T.VETO) == build_graph(rep, T.VETO)

    def test_not_proper(self):
        with pytest.raises(NotProper):
            proper_to_unit(R([(0, 2, 4), (1, 2.5, 3)]))

    def test_random(self):
        rng = random.Random(10)
        for _ in range(100):
            rep = random_proper_rep(rng, rng.randint(1, 9))
            out = proper_to_unit(rep)
            assert UNIT in flavor_flags(out) and ordering_word(out) == ordering_word(rep)


class TestMuda:
    def test_single(self):
        assert muda_to_unit_interval(R([(0, 1, 2)])) == [(F(1, 2), F(3, 2))]

    def test_pair(self):
        rep = R([(0, 1, 2), (0.8, 1.8, 2.8)])
        assert muda_to_unit_interval(rep) == [(F(1, 2), F(3, 2)), (F(13, 10), F(23, 10))]
        assert build_graph(rep, T.DOUBLE_APPROVAL) == interval_graph(muda_to_unit_interval(rep))

    def test_round_trip(self):
        ivs = [(0, 1), (F(1, 2), F(3, 2)), (3, 4)]
        rep = unit_interval_to_muda(ivs)
        assert {UNIT, MIDPOINT} <= flavor_flags(rep)
        assert muda_to_unit_interval(rep) == [(F(a), F(b)) for a, b in ivs]
        assert build_graph(rep, T.DOUBLE_APPROVAL) == interval_graph(ivs)

    def test_errors(self):
        with pytest.raises(NotMidpointUnit):
            muda_to_unit_interval(R([(0, 1, 3)]))
        with pytest.raises(NotUnitIntervals):
            unit_interval_to_muda([(0, 1), (0, 2)])


@settings(max_examples=200, deadline=None)
@given(st.lists(st.fractions(min_value=-20, max_value=20), min_size=1, max_size=8),
       st.fractions(min_value=F(1, 10), max_value=5))
def test_muda_graph_is_the_unit_interval_graph(starts, length):
    ivs = [(x, x + length) for x in starts]
    rep = unit_interval_to_muda(ivs)
    assert build_graph(rep, T.DOUBLE_APPROVAL) == interval_graph(ivs)
    assert muda_to_unit_interval(rep) == ivs


class TestOrderCheck:
    def test_pass(self):
        assert mpvi_order_check(R([(0, 1, 2), (1, 2, 3)])).passed

    def test_marks_disagree(self):
        res = mpvi_order_check(R([(0, 3, 4), (1, 2, 5)]))
        assert not res.passed and res.pair == (0, 1) and res.where == "marks"

    def test_rights_disagree(self):
        res = mpvi_order_check(R([(0, 1, 5), (1, 2, 4)]))
        assert not res.passed and res.where == "rights"

    def test_random_midpoint_proper(self):
        rng = random.Random(12)
        for _ in range(200):
            rep = random_midpoint_proper_rep(rng, rng.randint(1, 10))
            assert {MIDPOINT, PROPER} <= flavor_flags(rep)
            assert mpvi_order_check(rep).passed

    def test_cycle_families(self):
        for n in range(4, 10):
            assert mpvi_order_check(fam.vi_family_rep("cycle", n)).passed


def test_chromatic_of_veto_graphs_at_most_four_for_unit():
    rng = random.Random(13)
    for _ in range(50):
        rep = random_unit_rep(rng, rng.randint(1, 10))
        g = build_graph(rep, T.VETO)
        assert chromatic_number(g).chi <= 4
