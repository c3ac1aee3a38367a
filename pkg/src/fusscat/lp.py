"""Exact rational linear programming.

A dense two-phase simplex over ``Fraction`` with Bland's rule, sized for the
small systems that arise from hyperplane arrangements of rank at most 3 or 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

OPTIMAL, INFEASIBLE, UNBOUNDED = "optimal", "infeasible", "unbounded"


@dataclass
class LPResult:
    status: str
    value: Optional[Fraction] = None
    x: Optional[tuple] = None


def _pivot(T: list, basis: list, r: int, c: int) -> None:
    row = T[r]
    p = row[c]
    if p != 1:
        T[r] = row = [v / p for v in row]
    for i, other in enumerate(T):
        if i != r and other[c] != 0:
            f = other[c]
            T[i] = [a - f * b for a, b in zip(other, row)]
    basis[r] = c


def _run(T: list, basis: list, obj: int, allowed: int) -> str:
    """Maximize the objective stored (negated) in row ``obj``; Bland's rule.

    The last two rows of ``T`` are objective rows and never pivot rows.
    """
    m = len(T) - 2
    while True:
        col = next((j for j in range(allowed) if T[obj][j] < 0), None)
        if col is None:
            return OPTIMAL
        best = None
        for i in range(m):
            a = T[i][col]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return UNBOUNDED
        _pivot(T, basis, best[1], col)


def maximize_nonneg(c: Sequence, A: Sequence[Sequence], b: Sequence) -> LPResult:
    """max c.x subject to A x <= b, x >= 0."""
    m, n = len(A), len(c)
    # columns: x (n), slacks (m), artificials (m), rhs
    width = n + 2 * m + 1
    T = []
    basis = []
    for i in range(m):
        sign = -1 if b[i] < 0 else 1
        row = [Fraction(sign * a) for a in A[i]]
        row += [Fraction(sign if j == i else 0) for j in range(m)]
        row += [Fraction(1 if j == i else 0) for j in range(m)]
        row.append(Fraction(sign * b[i]))
        T.append(row)
        basis.append(n + i if sign > 0 else n + m + i)
    real = [Fraction(-v) for v in c] + [Fraction(0)] * (2 * m + 1)
    # phase one objective: maximize -sum of basic artificials
    phase = [Fraction(0)] * width
    for i in range(m):
        if basis[i] >= n + m:
            phase = [p - v for p, v in zip(phase, T[i])]
            phase[basis[i]] += 1
    for j in range(n + m, n + 2 * m):
        phase[j] = Fraction(0)
    T.append(real)
    T.append(phase)
    status = _run(T, basis, len(T) - 1, n + m)
    if status != OPTIMAL or T[-1][-1] != 0:
        return LPResult(INFEASIBLE)
    # drive remaining artificials out of the basis
    for i in range(m):
        if basis[i] >= n + m:
            col = next((j for j in range(n + m) if T[i][j] != 0), None)
            if col is not None:
                _pivot(T, basis, i, col)
    T.pop()
    T.append([Fraction(0)] * width)
    status = _run(T, basis, m, n + m)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = T[i][-1]
    return LPResult(OPTIMAL, T[m][-1], tuple(x))


def maximize(c: Sequence, A: Sequence[Sequence], b: Sequence) -> LPResult:
    """max c.x subject to A x <= b with x free (split into positive parts)."""
    n = len(c)
    A2 = [list(row) + [-v for v in row] for row in A]
    res = maximize_nonneg(list(c) + [-v for v in c], A2, b)
    if res.status != OPTIMAL:
        return res
    x = tuple(res.x[j] - res.x[n + j] for j in range(n))
    return LPResult(OPTIMAL, res.value, x)


def max_slack(A: Sequence[Sequence], b: Sequence, cap: int = 1) -> LPResult:
    """Largest s <= cap such that A x + s <= b (componentwise) for some x.

    The open polyhedron {A x < b} is nonempty iff the returned value is positive.
    """
    rows = [list(row) + [1] for row in A]
    rows.append([0] * len(A[0]) + [1] if A else [1])
    rhs = list(b) + [cap]
    c = [0] * (len(rows[0]) - 1) + [1]
    return maximize(c, rows, rhs)


def strictly_feasible(A: Sequence[Sequence], b: Sequence) -> bool:
    res = max_slack(A, b)
    return res.status == OPTIMAL and res.value > 0


def is_bounded(A: Sequence[Sequence], b: Sequence) -> bool:
    """Whether the (nonempty) polyhedron {A x <= b} is bounded."""
    n = len(A[0])
    for j in range(n):
        for sgn in (1, -1):
            c = [sgn if i == j else 0 for i in range(n)]
            if maximize(c, A, b).status == UNBOUNDED:
                return False
    return True


# ----- integer phase-two simplex ---------------------------------------------
def _lcm_den(values) -> int:
    out = 1
    for v in values:
        d = Fraction(v).denominator
        out = out * d // _gcd(out, d)
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def maximize_from_origin(c: Sequence[int], A: Sequence[Sequence[int]], b: Sequence[int],
                         stop: Optional[Fraction] = None) -> LPResult:
    """max c.x over {A x <= b}, x free, for integer data with b >= 0.

    The origin is feasible, so a single phase suffices. Pivoting is fraction
    free: all tableau entries stay integers and ``d`` is the common denominator.
    If ``stop`` is given the search ends as soon as a vertex with objective
    value above ``stop`` is reached (the status is then "optimal" with that value).
    """
    n, m = len(c), len(A)
    if any(v < 0 for v in b):
        raise ValueError("origin must be feasible")
    width = 2 * n + m
    T = []
    for i, row in enumerate(A):
        r = list(row) + [-v for v in row] + [0] * m + [b[i]]
        r[2 * n + i] = 1
        T.append(r)
    T.append([-v for v in c] + list(c) + [0] * m + [0])
    basis = [2 * n + i for i in range(m)]
    d = 1
    obj = T[m]
    while True:
        if stop is not None and obj[-1] > stop * d:
            break
        col = next((j for j in range(width) if obj[j] < 0), None)
        if col is None:
            break
        r = None
        for i in range(m):
            a = T[i][col]
            if a > 0:
                if r is None:
                    r = i
                    continue
                lhs, rhs = T[i][-1] * T[r][col], T[r][-1] * a
                if lhs < rhs or (lhs == rhs and basis[i] < basis[r]):
                    r = i
        if r is None:
            return LPResult(UNBOUNDED)
        p = T[r][col]
        prow = T[r]
        for i in range(m + 1):
            if i == r:
                continue
            row = T[i]
            f = row[col]
            if f == 0:
                T[i] = [(p * x) // d for x in row]
            else:
                T[i] = [(p * x - f * y) // d for x, y in zip(row, prow)]
        obj = T[m]
        basis[r] = col
        d = p
    x = [Fraction(0)] * (2 * n)
    for i, j in enumerate(basis):
        if j < 2 * n:
            x[j] = Fraction(T[i][-1], d)
    return LPResult(OPTIMAL, Fraction(obj[-1], d), tuple(x[j] - x[n + j] for j in range(n)))


def interior_point(A: Sequence[Sequence[int]], b: Sequence[int]) -> Optional[tuple]:
    """A point with A x < b (integer data), or None if there is none."""
    n = len(A[0])
    K = max([0] + [-v for v in b])
    rows = [list(r) + [1] for r in A] + [[0] * n + [1], [0] * n + [-1]]
    rhs = [v + K for v in b] + [K + 1, 0]
    res = maximize_from_origin([0] * n + [1], rows, rhs, stop=Fraction(K))
    if res.status != OPTIMAL or res.value <= K:
        return None
    return res.x[:n]


def _shifted(A, b, point):
    """Integer system for w = D (x - point): A w <= D (b - A point)."""
    D = _lcm_den(point)
    P = [int(v * D) for v in point]
    rhs = [D * bi - sum(a * p for a, p in zip(row, P)) for row, bi in zip(A, b)]
    return rhs, D, P


def redundancy_flags(A: Sequence[Sequence[int]], b: Sequence[int], point: Sequence) -> list[bool]:
    """For each row, whether it is irredundant for {A x <= b}.

    ``point`` must satisfy all inequalities strictly.
    """
    rhs, D, P = _shifted(A, b, point)
    out = []
    for j, row in enumerate(A):
        others = [r for i, r in enumerate(A) if i != j]
        orhs = [v for i, v in enumerate(rhs) if i != j]
        if not others:
            out.append(True)
            continue
        res = maximize_from_origin(list(row), others, orhs, stop=Fraction(rhs[j]))
        out.append(res.status == UNBOUNDED or res.value > rhs[j])
    return out


def bounded_around(A: Sequence[Sequence[int]], b: Sequence[int], point: Sequence) -> bool:
    """Whether {A x <= b} is bounded, given a strictly interior ``point``."""
    rhs, _, _ = _shifted(A, b, point)
    n = len(A[0])
    for j in range(n):
        for sgn in (1, -1):
            c = [sgn if i == j else 0 for i in range(n)]
            if maximize_from_origin(c, A, rhs).status == UNBOUNDED:
                return False
    return True
