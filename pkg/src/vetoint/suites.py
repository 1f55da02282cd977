"""Seeded invariant suites shared by the ``check`` command and the tests.

Each suite returns one row per trial; every row has ``trial``, ``n`` and a
boolean ``holds``.
"""

from __future__ import annotations

import random
from typing import Callable

from .analysis import is_triangle_free, mpvi_order_check, proper_to_unit, uvi_four_color
from .generators import (
    random_midpoint_proper_rep,
    random_midpoint_unit_rep,
    random_proper_rep,
    random_rep,
    random_tied_rep,
    random_unit_rep,
)
from .model import UNIT, flavor_flags, ordering_word, perturb_distinct
from .semantics import SemanticsTag, build_graph, partition_check, reduce_to_double, split_to_k_veto

T = SemanticsTag


def _sizes(rng: random.Random, n_min: int, n_max: int) -> int:
    return rng.randint(n_min, n_max)


def triangle_free(seed: int, trials: int, n_max: int = 8, k: int = 1) -> list[dict]:
    rng = random.Random(seed)
    tag = T.VETO if k == 1 else T.K_VETO
    rows = []
    for t in range(trials):
        rep = random_rep(rng, _sizes(rng, 1, n_max), k)
        g = build_graph(rep, tag)
        rows.append({"trial": t, "n": rep.n, "k": k, "edges": g.m, "holds": is_triangle_free(g)})
    return rows


def partition(seed: int, trials: int, n_max: int = 8) -> list[dict]:
    rng = random.Random(seed)
    rows = []
    for t in range(trials):
        rep = random_rep(rng, _sizes(rng, 1, n_max))
        report = partition_check(rep)
        rows.append({"trial": t, "n": rep.n, **report.counts(), "holds": report.holds})
    return rows


def midpoint_unit_single_approval(seed: int, trials: int, n_max: int = 8) -> list[dict]:
    """Midpoint-unit representations have no single approval edges."""
    rng = random.Random(seed)
    rows = []
    for t in range(trials):
        rep = random_midpoint_unit_rep(rng, _sizes(rng, 1, n_max))
        m = build_graph(rep, T.SINGLE_APPROVAL).m
        rows.append({"trial": t, "n": rep.n, "single_approval": m, "holds": m == 0})
    return rows


def mpvi_order(seed: int, trials: int, n_max: int = 10) -> list[dict]:
    rng = random.Random(seed)
    rows = []
    for t in range(trials):
        rep = random_midpoint_proper_rep(rng, _sizes(rng, 1, n_max))
        res = mpvi_order_check(rep)
        rows.append({"trial": t, "n": rep.n, "holds": res.passed})
    return rows


def perturbation(seed: int, trials: int, n_max: int = 6, k: int = 1) -> list[dict]:
    """Tied representations: perturbing gives distinct points and the same graph under every semantics."""
    rng = random.Random(seed)
    rows = []
    for t in range(trials):
        rep = random_tied_rep(rng, _sizes(rng, 2, n_max), k)
        out = perturb_distinct(rep)
        tags = [s for s in T if s is not T.VETO_DIRECTED and s.accepts(k)]
        same = all(build_graph(rep, s) == build_graph(out, s) for s in tags)
        ties = len(rep.all_points()) - len(set(rep.all_points()))
        distinct = out.has_distinct_points()
        rows.append({"trial": t, "n": rep.n, "k": k, "ties": ties, "distinct": distinct, "same_graph": same,
                     "holds": distinct and same})
    return rows


def uvi_coloring(seed: int, trials: int, n_max: int = 12) -> list[dict]:
    rng = random.Random(seed)
    rows = []
    for t in range(trials):
        rep = random_unit_rep(rng, _sizes(rng, 1, n_max))
        coloring = uvi_four_color(rep)
        ok = coloring.is_proper(build_graph(rep, T.VETO)) and coloring.used <= 4
        rows.append({"trial": t, "n": rep.n, "colors": coloring.used, "holds": ok})
    return rows


def proper_unit(seed: int, trials: int, n_max: int = 10) -> list[dict]:
    rng = random.Random(seed)
    rows = []
    for t in range(trials):
        rep = random_proper_rep(rng, _sizes(rng, 1, n_max))
        out = proper_to_unit(rep)
        ok = UNIT in flavor_flags(out) and ordering_word(out) == ordering_word(rep)
        rows.append({"trial": t, "n": rep.n, "holds": ok})
    return rows


def k_veto(seed: int, trials: int, n_max: int = 6, k_max: int = 5) -> list[dict]:
    """Splitting one mark into several, and reducing back to two, keep the veto graph."""
    rng = random.Random(seed)
    rows = []
    for t in range(trials):
        rep = random_rep(rng, _sizes(rng, 1, n_max))
        g = build_graph(rep, T.VETO)
        ok = True
        for k in range(2, k_max + 1):
            split = split_to_k_veto(rep, k)
            ok = ok and build_graph(split, T.K_VETO) == g
            ok = ok and build_graph(reduce_to_double(split), T.K_VETO) == g
        wide = random_rep(rng, rep.n, rng.randint(2, k_max))
        ok = ok and build_graph(reduce_to_double(wide), T.K_VETO) == build_graph(wide, T.K_VETO)
        rows.append({"trial": t, "n": rep.n, "holds": ok})
    return rows


SUITES: dict[str, Callable[..., list[dict]]] = {
    "triangle-free": triangle_free,
    "partition": partition,
    "midpoint-unit-sa": midpoint_unit_single_approval,
    "mpvi-order": mpvi_order,
    "perturbation": perturbation,
    "uvi-color": uvi_coloring,
    "proper-to-unit": proper_unit,
    "k-veto": k_veto,
}
