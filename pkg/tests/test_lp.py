from __future__ import annotations

import random
from fractions import Fraction
from itertools import islice

import pytest

from oracles import interleavings
from vetoint.model import MIDPOINT, PROPER, UNIT, OrderingWord, flavor_flags, ordering_word
from vetoint.recognize.lp import build_system, realizable, simplex_max, solve_difference, solve_simplex

F = Fraction
W = OrderingWord.parse


def _linprog_feasible(word: OrderingWord, flavor) -> bool:
    """Float oracle: maximise the margin with scipy on the raw (l, m, r) variables."""
    import numpy as np
    from scipy.optimize import linprog

    n = word.n
    idx = {(v, s): 3 * v + s for v in range(n) for s in range(3)}
    nv = 3 * n + 1
    A_ub, b_ub = [], []
    for p, q in zip(word.symbols, word.symbols[1:]):
        row = np.zeros(nv)
        row[idx[p]] += 1
        row[idx[q]] -= 1
        row[-1] = 1
        A_ub.append(row)
        b_ub.append(0)
    A_eq, b_eq = [], []
    for v in range(n):
        if UNIT in flavor:
            row = np.zeros(nv)
            row[idx[(v, 2)]], row[idx[(v, 0)]] = 1, -1
            A_eq.append(row)
            b_eq.append(1)
        if MIDPOINT in flavor:
            row = np.zeros(nv)
            row[idx[(v, 2)]], row[idx[(v, 1)]], row[idx[(v, 0)]] = 1, -2, 1
            A_eq.append(row)
            b_eq.append(0)
    c = np.zeros(nv)
    c[-1] = -1
    bounds = [(None, None)] * (nv - 1) + [(None, 1)]
    res = linprog(c, A_ub=A_ub, b_ub=b_ub, A_eq=A_eq or None, b_eq=b_eq or None, bounds=bounds, method="highs")
    return res.status == 0 and -res.fun > 1e-9


class TestExamples:
    def test_unflavoured_ranks(self):
        rep = realizable(W("L0 M0 L1 R0 M1 R1"))
        assert rep.as_tuples() == [(1, 2, 4), (3, 5, 6)]

    def test_midpoint_unit_k11_pattern(self):
        w = W("L0 M0 L1 R0 M1 R1")
        rep = realizable(w, {UNIT, MIDPOINT})
        assert rep is not None and ordering_word(rep) == w
        assert {UNIT, MIDPOINT} <= flavor_flags(rep)
        assert all(iv.length == 1 for iv in rep.intervals)

    def test_overlap_word_is_unit_realizable(self):
        # two unit intervals (0, 3/4, 1) and (1/2, 5/4, 3/2) realise it
        w = W("L0 L1 M0 R0 M1 R1")
        rep = realizable(w, {UNIT})
        assert rep is not None and ordering_word(rep) == w
        assert realizable(w, {UNIT, MIDPOINT}) is None

    def test_containment_word_is_not_unit(self):
        w = W("L0 L1 M1 R1 M0 R0")
        assert realizable(w, {UNIT}) is None
        assert realizable(w, {PROPER}) is None
        assert realizable(w, {MIDPOINT}) is not None

    def test_proper_flavor_is_combinatorial(self):
        rep = realizable(W("L0 L1 M0 R0 M1 R1"), {PROPER})
        assert rep is not None and PROPER in flavor_flags(rep)


class TestSimplex:
    def test_textbook(self):
        # max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18 -> (2, 6), 36
        status, x, value = simplex_max([[F(1), F(0)], [F(0), F(2)], [F(3), F(2)]], [F(4), F(12), F(18)], [F(3), F(5)])
        assert status == "optimal" and x == [2, 6] and value == 36

    def test_infeasible(self):
        status, _, _ = simplex_max([[F(1)], [F(-1)]], [F(1), F(-2)], [F(1)])
        assert status == "infeasible"

    def test_unbounded(self):
        status, _, _ = simplex_max([[F(-1), F(1)]], [F(1)], [F(1), F(0)])
        assert status == "unbounded"

    def test_negative_rhs_phase_one(self):
        # x >= 2 written as -x <= -2; min x -> max -x
        status, x, value = simplex_max([[F(-1)], [F(1)]], [F(-2), F(5)], [F(-1)])
        assert status == "optimal" and x == [2] and value == -2


@pytest.mark.parametrize("flavor", [{UNIT}, {MIDPOINT}, {UNIT, MIDPOINT}])
def test_all_two_interval_words_match_float_oracle(flavor):
    for seq in interleavings(2):
        w = OrderingWord.from_vertex_sequence(seq)
        rep = realizable(w, flavor)
        assert (rep is not None) == _linprog_feasible(w, flavor), str(w)
        if rep is not None:
            assert ordering_word(rep) == w and set(flavor) <= flavor_flags(rep)


@pytest.mark.parametrize("flavor", [{UNIT}, {MIDPOINT}, {UNIT, MIDPOINT}])
def test_sampled_three_interval_words_match_float_oracle(flavor):
    rng = random.Random(len(flavor))
    words = list(interleavings(3))
    for seq in rng.sample(words, 250):
        w = OrderingWord.from_vertex_sequence(seq)
        rep = realizable(w, flavor)
        assert (rep is not None) == _linprog_feasible(w, flavor), str(w)
        if rep is not None:
            assert ordering_word(rep) == w


def test_difference_and_simplex_agree_on_unit_words():
    for seq in islice(interleavings(3), 0, None, 3):
        system = build_system(OrderingWord.from_vertex_sequence(seq), {UNIT})
        assert system.is_difference
        a = solve_difference(system)
        b = solve_simplex(system)
        assert (a is None) == (b is None)
        if a is not None:
            margin, coords = a
            assert margin > 0
            assert all(coords[q] > coords[p] for p, q in system.pairs)


def test_proper_words_are_unit_realizable():
    from vetoint.recognize.lp import word_is_proper

    for seq in interleavings(3):
        w = OrderingWord.from_vertex_sequence(seq)
        assert word_is_proper(w) == (realizable(w, {UNIT}) is not None)


def test_k2_words_unit():
    w = OrderingWord.parse("L0 M0.0 L1 M0.1 R0 M1.0 M1.1 R1", k=2)
    rep = realizable(w, {UNIT})
    assert rep is not None and ordering_word(rep) == w
