"""Exact realizability of an ordering word under flavor constraints.

A word is realized by coordinates in which consecutive symbols are strictly
increasing. Strictness is handled by maximizing one margin variable ``t``
(capped at 1); the word is realizable iff the optimum is positive. Unit
length is normalized to 1 and eliminated (``r = l + 1``), midpoint marks are
eliminated through ``r = 2m - l``.

Two exact solvers sit behind :func:`realizable`: a two-phase rational
simplex for general systems and a Bellman-Ford pass over lexicographic
``(constant, margin)`` weights for pure difference systems (any system with
the unit constraint). They are cross-checked in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from ..model import MIDPOINT, PROPER, UNIT, OrderingWord, Representation, rep_from_word

ZERO = Fraction(0)
ONE = Fraction(1)

# affine form: ({var index: coefficient}, constant)
Affine = tuple[dict[int, Fraction], Fraction]


@dataclass
class LinearSystem:
    """Symbols as affine forms over free variables, plus strict order constraints.

    ``forms[s]`` is the coordinate of symbol ``s``; each pair ``(p, q)`` in
    ``pairs`` demands ``forms[q] - forms[p] >= t`` for the margin ``t``.
    """

    n: int
    k: int
    flavor: frozenset[str]
    nvars: int
    forms: dict[tuple[int, int], Affine]
    pairs: list[tuple[tuple[int, int], tuple[int, int]]]

    @property
    def is_difference(self) -> bool:
        return all(len(f) <= 1 and all(c == 1 for c in f.values()) for f, _ in self.forms.values())

    def rows(self) -> list[tuple[dict[int, Fraction], Fraction]]:
        """Constraints ``sum coef*x + t <= rhs`` in variable space (t excluded)."""
        out = []
        for p, q in self.pairs:
            (fp, cp), (fq, cq) = self.forms[p], self.forms[q]
            coef: dict[int, Fraction] = {}
            for v, c in fp.items():
                coef[v] = coef.get(v, ZERO) + c
            for v, c in fq.items():
                coef[v] = coef.get(v, ZERO) - c
            coef = {v: c for v, c in coef.items() if c != 0}
            out.append((coef, cq - cp))
        return out

    def evaluate(self, x: list[Fraction]) -> dict[tuple[int, int], Fraction]:
        return {s: const + sum(c * x[v] for v, c in f.items()) for s, (f, const) in self.forms.items()}


def _affine_forms(n: int, k: int, flavor: frozenset[str]) -> tuple[int, dict[tuple[int, int], Affine]]:
    unit = UNIT in flavor
    mid = MIDPOINT in flavor
    if mid and k != 1:
        raise ValueError("midpoint flavor needs exactly one mark per interval")
    forms: dict[tuple[int, int], Affine] = {}
    count = 0

    def new() -> dict[int, Fraction]:
        nonlocal count
        count += 1
        return {count - 1: ONE}

    for v in range(n):
        lv = new()
        forms[(v, 0)] = (lv, ZERO)
        if unit and mid:
            forms[(v, 1)] = (dict(lv), Fraction(1, 2))
            forms[(v, 2)] = (dict(lv), ONE)
            continue
        for slot in range(1, k + 1):
            forms[(v, slot)] = (new(), ZERO)
        if unit:
            forms[(v, k + 1)] = (dict(lv), ONE)
        elif mid:
            (li,) = lv
            (mi,) = forms[(v, 1)][0]
            forms[(v, 2)] = ({mi: Fraction(2), li: Fraction(-1)}, ZERO)
        else:
            forms[(v, k + 1)] = (new(), ZERO)
    return count, forms


def build_system(word: OrderingWord, flavor: Iterable[str]) -> LinearSystem:
    """Constraints saying consecutive symbols of ``word`` strictly increase."""
    flavor = frozenset(flavor)
    nvars, forms = _affine_forms(word.n, word.k, flavor)
    pairs = list(zip(word.symbols, word.symbols[1:]))
    return LinearSystem(word.n, word.k, flavor, nvars, forms, pairs)


def build_prefix_system(n: int, k: int, prefix: list[tuple[int, int]], flavor: Iterable[str]) -> LinearSystem:
    """Constraints shared by every completion of an ordering-word prefix.

    Placed symbols keep their order; every unplaced symbol comes after the
    last placed one and after its own predecessor on the same interval.
    """
    flavor = frozenset(flavor)
    nvars, forms = _affine_forms(n, k, flavor)
    pairs = list(zip(prefix, prefix[1:]))
    placed = [0] * n
    for v, _ in prefix:
        placed[v] += 1
    last = prefix[-1] if prefix else None
    for v in range(n):
        for slot in range(placed[v], k + 2):
            if slot > 0:
                pairs.append(((v, slot - 1), (v, slot)))
            if last is not None and slot == placed[v] and (v, slot - 1) != last:
                pairs.append((last, (v, slot)))
    return LinearSystem(n, k, flavor, nvars, forms, pairs)


# --- two-phase simplex, Bland's rule, exact -----------------------------------------


class _Tableau:
    """Maximize c.x subject to A x <= b, x >= 0 (CLRS slack form)."""

    def __init__(self, A: list[list[Fraction]], b: list[Fraction], c: list[Fraction]):
        self.m = len(A)
        self.n = len(c)
        self.N = list(range(self.n))
        self.B = list(range(self.n, self.n + self.m))
        # row i: basic var B[i] = b[i] - sum_j A[i][j] * x_{N[j]}
        self.A = [list(row) for row in A]
        self.b = list(b)
        self.c = list(c)
        self.v = ZERO

    def pivot(self, r: int, e: int) -> None:
        A, b = self.A, self.b
        piv = A[r][e]
        row = A[r]
        inv = ONE / piv
        b[r] *= inv
        for j in range(len(row)):
            row[j] = row[j] * inv if j != e else inv
        for i in range(self.m):
            if i == r:
                continue
            f = A[i][e]
            if f == 0:
                continue
            Ai = A[i]
            b[i] -= f * b[r]
            for j in range(len(Ai)):
                if j == e:
                    Ai[j] = -f * row[e]
                elif row[j] != 0:
                    Ai[j] -= f * row[j]
        f = self.c[e]
        if f != 0:
            self.v += f * b[r]
            for j in range(len(self.c)):
                if j == e:
                    self.c[j] = -f * row[e]
                elif row[j] != 0:
                    self.c[j] -= f * row[j]
        self.N[e], self.B[r] = self.B[r], self.N[e]

    def optimize(self) -> bool:
        """Run simplex to optimality; False if unbounded."""
        while True:
            cands = [j for j in range(len(self.N)) if self.c[j] > 0]
            if not cands:
                return True
            e = min(cands, key=lambda j: self.N[j])
            best = None
            for i in range(self.m):
                a = self.A[i][e]
                if a > 0:
                    ratio = self.b[i] / a
                    key = (ratio, self.B[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return False
            self.pivot(best[1], e)

    def solution(self, nvars: int) -> list[Fraction]:
        x = [ZERO] * nvars
        for i, var in enumerate(self.B):
            if var < nvars:
                x[var] = self.b[i]
        return x


def simplex_max(A: list[list[Fraction]], b: list[Fraction], c: list[Fraction]):
    """Exact LP ``max c.x s.t. A x <= b, x >= 0``.

    Returns ``("optimal", x, value)``, ``("infeasible", None, None)`` or
    ``("unbounded", None, None)``.
    """
    n = len(c)
    m = len(A)
    if m == 0 or min(b) >= 0:
        tab = _Tableau(A, b, c)
        if not tab.optimize():
            return "unbounded", None, None
        return "optimal", tab.solution(n), tab.v
    # auxiliary problem with x0 at column n: max -x0 s.t. A x - x0 <= b
    aux_A = [row + [-ONE] for row in A]
    aux = _Tableau(aux_A, list(b), [ZERO] * n + [-ONE])
    r = min(range(m), key=lambda i: (b[i], i))
    aux.pivot(r, n)
    aux.optimize()
    if aux.v != 0:
        return "infeasible", None, None
    x0 = n
    if x0 in aux.B:
        i = aux.B.index(x0)
        e = next((j for j in range(len(aux.N)) if aux.A[i][j] != 0), None)
        if e is not None:
            aux.pivot(i, e)
    e0 = aux.N.index(x0)
    # drop x0 column and restore the original objective in terms of nonbasics
    for row in aux.A:
        del row[e0]
    del aux.N[e0]
    aux.c = [ZERO] * len(aux.N)
    aux.v = ZERO
    for j, var in enumerate(aux.N):
        if var < n:
            aux.c[j] += c[var]
    for i, var in enumerate(aux.B):
        if var < n and c[var] != 0:
            cv = c[var]
            aux.v += cv * aux.b[i]
            for j in range(len(aux.N)):
                aux.c[j] -= cv * aux.A[i][j]
    if not aux.optimize():
        return "unbounded", None, None
    # solution() indexes by original variable ids; x0 is no longer basic
    x = [ZERO] * n
    for i, var in enumerate(aux.B):
        if var < n:
            x[var] = aux.b[i]
    return "optimal", x, aux.v


def solve_simplex(system: LinearSystem) -> tuple[Fraction, dict] | None:
    """Maximize the margin; returns ``(margin, coordinates by symbol)`` when positive."""
    nv = system.nvars
    t = nv
    A, b = [], []
    for coef, rhs in system.rows():
        row = [ZERO] * (nv + 1)
        for v, c in coef.items():
            row[v] = c
        row[t] = ONE
        A.append(row)
        b.append(rhs)
    cap = [ZERO] * (nv + 1)
    cap[t] = ONE
    A.append(cap)
    b.append(ONE)
    c = [ZERO] * nv + [ONE]
    status, x, value = simplex_max(A, b, c)
    if status != "optimal" or value <= 0:
        return None
    return value, system.evaluate(x[:nv])


def solve_difference(system: LinearSystem) -> tuple[Fraction, dict] | None:
    """Bellman-Ford on ``x_v - x_u <= W + S*delta`` with lexicographic weights."""
    if not system.is_difference:
        raise ValueError("system has non-difference constraints")
    nv = system.nvars
    edges: list[tuple[int, int, Fraction, int]] = []
    for p, q in system.pairs:
        (fp, cp), (fq, cq) = system.forms[p], system.forms[q]
        (vp,), (vq,) = fp.keys(), fq.keys()
        # (x_q + cq) - (x_p + cp) >= delta  ->  x_p - x_q <= cq - cp - delta
        w = cq - cp
        if vp == vq:
            if w <= 0:
                return None
            continue
        edges.append((vq, vp, w, -1))
    dw = [ZERO] * nv
    ds = [0] * nv
    for _ in range(nv + 1):
        changed = False
        for u, v, w, s in edges:
            cand = (dw[u] + w, ds[u] + s)
            if cand < (dw[v], ds[v]):
                dw[v], ds[v] = cand
                changed = True
        if not changed:
            break
    else:
        return None
    delta = ONE
    for u, v, w, s in edges:
        slack_w = dw[u] + w - dw[v]
        slack_s = ds[u] + s - ds[v]
        if slack_w > 0 and slack_s < 0:
            delta = min(delta, slack_w / -slack_s)
    x = [dw[v] + delta * ds[v] for v in range(nv)]
    coords = system.evaluate(x)
    margin = min((coords[q] - coords[p] for p, q in system.pairs), default=ONE)
    return margin, coords


def word_is_proper(word: OrderingWord) -> bool:
    """No interval contains another: left ends and right ends in the same order."""
    k = word.k
    lefts = [v for v, s in word.symbols if s == 0]
    rights = [v for v, s in word.symbols if s == k + 1]
    return lefts == rights


def feasible(system: LinearSystem, method: str = "auto") -> tuple[Fraction, dict] | None:
    if method == "difference" or (method == "auto" and system.is_difference):
        return solve_difference(system)
    return solve_simplex(system)


def realizable(word: OrderingWord, flavor: Iterable[str] = (), method: str = "auto") -> Representation | None:
    """Coordinates realizing ``word`` under the flavor flags, or None.

    With no unit/midpoint constraint the ranks ``1..(k+2)n`` are returned.
    """
    flavor = frozenset(flavor)
    if PROPER in flavor and not word_is_proper(word):
        return None
    geometric = flavor & {UNIT, MIDPOINT}
    if not geometric:
        return rep_from_word(word, flavor=flavor)
    result = feasible(build_system(word, geometric), method)
    if result is None:
        return None
    _, coords = result
    out_flavor = flavor | ({PROPER} if UNIT in flavor else set())
    return rep_from_word(word, [coords[s] for s in word.symbols], flavor=out_flavor)
