"""Exact scalars for root coordinates.

Crystallographic groups live over the rationals and use ``Fraction``.  The
dihedral groups I2(m) and the types H3, H4 need the real cyclotomic field
generated by ``2cos(pi/m)``; elements of that field are represented by
coefficient vectors modulo the minimal polynomial.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union


def _trim(coeffs: list) -> list:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _poly_divmod(a: Sequence, b: Sequence) -> tuple[list, list]:
    a = [Fraction(x) for x in a]
    b = _trim([Fraction(x) for x in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    lead = b[-1]
    while len(_trim(r)) >= len(b):
        shift = len(r) - len(b)
        f = r[-1] / lead
        q[shift] = f
        for i, y in enumerate(b):
            r[shift + i] -= f * y
        _trim(r)
    return _trim(q), r


def _poly_sub(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return _trim(out)


@lru_cache(maxsize=None)
def cyclotomic_coefficients(m: int) -> tuple[int, ...]:
    """Integer coefficients (low degree first) of the m-th cyclotomic polynomial."""
    if m < 1:
        raise ValueError("cyclotomic index must be positive")
    num = [Fraction(-1)] + [Fraction(0)] * (m - 1) + [Fraction(1)]
    for d in range(1, m):
        if m % d == 0:
            num, rem = _poly_divmod(num, cyclotomic_coefficients(d))
            assert not rem
    return tuple(int(x) for x in num)


@lru_cache(maxsize=None)
def minpoly_two_cos(m: int) -> tuple[Fraction, ...]:
    """Monic minimal polynomial of ``2cos(pi/m)`` over Q (low degree first).

    ``2cos(pi/m) = z + 1/z`` for a primitive 2m-th root of unity z.  The
    palindromic cyclotomic polynomial folds into a polynomial in ``z + 1/z``
    through the Dickson-type recursion ``D_{j+1} = x D_j - D_{j-1}``.
    """
    phi = cyclotomic_coefficients(2 * m)
    d = (len(phi) - 1) // 2
    dickson = [[Fraction(2)], [Fraction(0), Fraction(1)]]
    for _ in range(2, d + 1):
        nxt = _poly_sub(_poly_mul([Fraction(0), Fraction(1)], dickson[-1]), dickson[-2])
        dickson.append(nxt)
    total = [Fraction(phi[d])]
    for j in range(1, d + 1):
        term = [phi[d + j] * c for c in dickson[j]]
        n = max(len(total), len(term))
        total = [(total[i] if i < len(total) else 0) + (term[i] if i < len(term) else 0)
                 for i in range(n)]
    return tuple(_trim(total))


class NumberField:
    """The field Q[x]/(f) for a monic irreducible f, with a chosen real embedding."""

    def __init__(self, minpoly: Sequence, generator_value: float, name: str = "x"):
        self.minpoly = tuple(Fraction(c) for c in minpoly)
        if self.minpoly[-1] != 1:
            raise ValueError("minimal polynomial must be monic")
        self.degree = len(self.minpoly) - 1
        self.generator_value = generator_value
        self.name = name

    def __repr__(self) -> str:
        return f"NumberField(degree={self.degree}, x~{self.generator_value:.6f})"

    def __eq__(self, other) -> bool:
        return isinstance(other, NumberField) and self.minpoly == other.minpoly

    def __hash__(self) -> int:
        return hash(self.minpoly)

    def reduce(self, coeffs: Sequence) -> tuple[Fraction, ...]:
        _, r = _poly_divmod(list(coeffs), self.minpoly)
        r = list(r) + [Fraction(0)] * (self.degree - len(r))
        return tuple(r)

    def element(self, coeffs: Sequence) -> "NFElement":
        return NFElement(self, self.reduce(coeffs))

    def gen(self) -> "NFElement":
        return self.element([0, 1])

    def from_rational(self, q) -> "NFElement":
        return self.element([Fraction(q)])


@lru_cache(maxsize=None)
def two_cos_field(m: int) -> NumberField:
    """The field Q(2cos(pi/m)); for m = 5 this is Q(phi) with phi the golden ratio."""
    return NumberField(minpoly_two_cos(m), 2 * math.cos(math.pi / m), name=f"2cos(pi/{m})")


Scalar = Union[Fraction, "NFElement"]


class NFElement:
    """An element of a NumberField, stored as reduced rational coefficients."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: NumberField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs
        self._hash = None

    def _coerce(self, other) -> "NFElement":
        if isinstance(other, NFElement):
            if other.field is not self.field and other.field != self.field:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return NFElement(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return NFElement(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NFElement(self.field, tuple(a * other for a in self.coeffs))
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.field.element(_poly_mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "NFElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        # extended Euclid: find u with u*self = 1 mod minpoly
        r0, r1 = list(self.field.minpoly), _trim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        c = r1[0]
        return self.field.element([x / c for x in s1])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return NFElement(self.field, tuple(a / other for a in self.coeffs))
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, NFElement):
            return self.coeffs == other.coeffs and self.field == other.field
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and all(c == 0 for c in self.coeffs[1:])
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if all(c == 0 for c in self.coeffs[1:]):
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash(self.coeffs)
        return self._hash

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def to_float(self) -> float:
        x = self.field.generator_value
        return float(sum(float(c) * x ** i for i, c in enumerate(self.coeffs)))

    def __float__(self) -> float:
        return self.to_float()

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            terms.append(str(c) if i == 0 else f"{c}*x^{i}")
        return "(" + (" + ".join(terms) or "0") + ")"


def to_float(x) -> float:
    return x.to_float() if isinstance(x, NFElement) else float(x)


def is_zero(x) -> bool:
    return x.is_zero() if isinstance(x, NFElement) else x == 0


def matrix_rank(rows: list[list]) -> int:
    """Exact rank by Gaussian elimination over Q or a NumberField."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, nrows):
            if not is_zero(m[r][col]):
                pivot = r
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][col]
        for r in range(rank + 1, nrows):
            x = m[r][col]
            if is_zero(x):
                continue
            f = x / pv
            row_r, row_p = m[r], m[rank]
            for c in range(col, ncols):
                if not is_zero(row_p[c]):
                    row_r[c] = row_r[c] - f * row_p[c]
        rank += 1
        if rank == nrows:
            break
    return rank


def integer_matrix_rank(rows: list[list[int]]) -> int:
    """Exact rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = None
        for r in range(rank, nrows):
            if m[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][col]
        for r in range(rank + 1, nrows):
            x = m[r][col]
            row_r, row_p = m[r], m[rank]
            for c in range(col, ncols):
                row_r[c] = (pv * row_r[c] - x * row_p[c]) // prev
        prev = pv
        rank += 1
        if rank == nrows:
            break
    return rank
