"""Seeded random representations for the property suites.

General scheme: draw ``(k+2)n`` distinct integers from ``[0, 10(k+2)n)``,
shuffle them, cut the list into consecutive blocks of ``k+2`` and sort each
block into an interval. Flavored generators build the constrained shape
directly and retry until all marked points are distinct.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .model import MIDPOINT, PROPER, UNIT, MarkedInterval, Representation

F = Fraction


def _distinct(ivs: list[MarkedInterval]) -> bool:
    pts = [p for iv in ivs for p in iv.points]
    return len(set(pts)) == len(pts)


def random_rep(rng: random.Random, n: int, k: int = 1) -> Representation:
    size = k + 2
    pool = rng.sample(range(10 * size * max(n, 1)), size * n)
    rng.shuffle(pool)
    ivs = [MarkedInterval.of(*sorted(pool[i * size:(i + 1) * size])) for i in range(n)]
    return Representation(tuple(ivs), k)


def _retry(rng: random.Random, make) -> Representation:
    while True:
        ivs = make()
        if _distinct(ivs):
            return ivs


def random_unit_rep(rng: random.Random, n: int, length: int = 1, den: int = 60) -> Representation:
    """Lefts on a grid of step ``1/den`` spanning about ``n`` lengths, one random interior mark each."""

    def make():
        out = []
        for _ in range(n):
            left = F(rng.randrange(0, n * den), den) * length
            mark = left + F(rng.randrange(1, den), den) * length
            out.append(MarkedInterval(left, (mark,), left + length))
        return out

    return Representation(tuple(_retry(rng, make)), 1, frozenset({UNIT}))


def random_midpoint_unit_rep(rng: random.Random, n: int, den: int = 60) -> Representation:
    def make():
        out = []
        for _ in range(n):
            left = F(rng.randrange(0, 2 * n * den), den)
            out.append(MarkedInterval(left, (left + F(1, 2),), left + 1))
        return out

    return Representation(tuple(_retry(rng, make)), 1, frozenset({UNIT, MIDPOINT}))


def _proper_ends(rng: random.Random, n: int) -> list[tuple[int, int]]:
    """Pair sorted lefts with sorted rights; the i-th right exceeds the i-th left by >= 2."""
    lefts = sorted(rng.sample(range(0, 40 * n), n))
    rights = sorted(left + rng.randrange(2, 20 * n) for left in lefts)
    return list(zip(lefts, rights))


def random_proper_rep(rng: random.Random, n: int) -> Representation:
    def make():
        out = []
        for left, right in _proper_ends(rng, n):
            out.append(MarkedInterval(F(left), (F(rng.randrange(left + 1, right)),), F(right)))
        return out

    return Representation(tuple(_retry(rng, make)), 1, frozenset({PROPER}))


def random_midpoint_proper_rep(rng: random.Random, n: int) -> Representation:
    def make():
        return [MarkedInterval(F(a), (F(a + b, 2),), F(b)) for a, b in _proper_ends(rng, n)]

    return Representation(tuple(_retry(rng, make)), 1, frozenset({PROPER, MIDPOINT}))


def random_tied_rep(rng: random.Random, n: int, k: int = 1) -> Representation:
    """Points on a grid of only ``n + k + 3`` values, so shared endpoints, shared
    marks and endpoint/mark coincidences of every kind are frequent. Redrawn
    until at least one coincidence occurs (needs ``n >= 2``)."""
    if n < 2:
        raise ValueError("a tie needs at least two intervals")
    size = k + 2
    grid = n + k + 3
    while True:
        ivs = [MarkedInterval.of(*sorted(rng.sample(range(grid), size))) for _ in range(n)]
        if not _distinct(ivs):
            return Representation(tuple(ivs), k)
