"""Exact univariate and bivariate polynomials, plus cyclotomic residues."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping

from .numberfield import cyclotomic_coefficients


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class IntPolynomial:
    """Univariate polynomial with integer (or, transiently, rational) coefficients.

    Coefficients are stored low degree first with no trailing zeros.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "IntPolynomial":
        return cls([0] * degree + [coeff])

    @classmethod
    def q_integer(cls, m: int) -> "IntPolynomial":
        """[m]_q = 1 + q + ... + q^(m-1)."""
        return cls([1] * m)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == IntPolynomial([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self), len(other))
        return IntPolynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = IntPolynomial([1])
        for _ in range(e):
            out = out * self
        return out

    def divmod(self, other: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        other = _as_poly(other)
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        r = [Fraction(c) for c in self.coeffs]
        lead = Fraction(other.coeffs[-1])
        dq = len(r) - len(other) + 1
        q = [Fraction(0)] * max(dq, 0)
        for shift in range(dq - 1, -1, -1):
            f = r[shift + len(other) - 1] / lead
            q[shift] = f
            if f:
                for i, b in enumerate(other.coeffs):
                    r[shift + i] -= f * b
        return IntPolynomial(q), IntPolynomial(r)

    def exact_div(self, other) -> "IntPolynomial":
        q, r = self.divmod(other)
        if r.coeffs:
            raise ArithmeticError("polynomial division leaves a remainder")
        return q

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def pretty(self, var: str = "q") -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


def _as_poly(x) -> IntPolynomial:
    return x if isinstance(x, IntPolynomial) else IntPolynomial([x])


def binomial_poly(shift, r: int) -> IntPolynomial:
    """The polynomial k -> binomial(k + shift, r) as an IntPolynomial in k."""
    out = IntPolynomial([1])
    for j in range(r):
        out = out * IntPolynomial([Fraction(shift - j), 1])
    fact = 1
    for j in range(2, r + 1):
        fact *= j
    return IntPolynomial(Fraction(c) / fact for c in out.coeffs)


def cyclotomic_polynomial(m: int) -> IntPolynomial:
    return IntPolynomial(cyclotomic_coefficients(m))


@dataclass(frozen=True)
class CyclotomicInt:
    """An integer polynomial reduced modulo the d-th cyclotomic polynomial.

    Represents the value of the polynomial at a primitive d-th root of unity.
    """

    d: int
    coeffs: tuple

    @classmethod
    def from_poly(cls, poly: IntPolynomial, d: int) -> "CyclotomicInt":
        _, r = poly.divmod(cyclotomic_polynomial(d))
        return cls(d, r.coeffs)

    def is_rational_integer(self) -> bool:
        return len(self.coeffs) <= 1 and all(isinstance(c, int) for c in self.coeffs)

    def value(self) -> int:
        if not self.is_rational_integer():
            raise ArithmeticError(f"residue {self.coeffs} mod Phi_{self.d} is not an integer")
        return self.coeffs[0] if self.coeffs else 0


def evaluate_at_root_of_unity(poly: IntPolynomial, order: int, power: int) -> int:
    """Evaluate poly at exp(2*pi*i*power/order), which must give a rational integer."""
    from math import gcd

    d = order // gcd(order, power % order) if power % order else 1
    return CyclotomicInt.from_poly(poly, d).value()


class BivariatePolynomial:
    """Sparse polynomial in two variables with exact coefficients.

    Monomials are keyed by exponent pairs (a, b) meaning ``u^a v^b``.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None):
        self.terms = {}
        for key, c in (terms or {}).items():
            c = _norm(c)
            if c != 0:
                self.terms[(int(key[0]), int(key[1]))] = c

    @classmethod
    def var(cls, which: int) -> "BivariatePolynomial":
        return cls({(1, 0): 1} if which == 0 else {(0, 1): 1})

    @classmethod
    def const(cls, c) -> "BivariatePolynomial":
        return cls({(0, 0): c})

    def coeff(self, a: int, b: int):
        return self.terms.get((a, b), 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = BivariatePolynomial.const(other)
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        other = _as_bi(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return BivariatePolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePolynomial({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_as_bi(other))

    def __rsub__(self, other):
        return _as_bi(other) - self

    def __mul__(self, other):
        other = _as_bi(other)
        out: dict = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, 0) + c1 * c2
        return BivariatePolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = BivariatePolynomial.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __call__(self, u, v):
        return sum((c * u ** a * v ** b for (a, b), c in self.terms.items()), 0)

    def degrees(self) -> tuple[int, int]:
        if not self.terms:
            return (0, 0)
        return (max(a for a, _ in self.terms), max(b for _, b in self.terms))

    def total_degree(self) -> int:
        return max((a + b for a, b in self.terms), default=0)

    def is_zero(self) -> bool:
        return not self.terms

    def substitute(self, u_frac, v_frac) -> tuple["BivariatePolynomial", "BivariatePolynomial"]:
        """Substitute rational functions u = nu/du, v = nv/dv; return (num, den)."""
        nu, du = u_frac
        nv, dv = v_frac
        da, db = self.degrees()
        num = BivariatePolynomial()
        for (a, b), c in self.terms.items():
            num = num + c * (nu ** a) * (du ** (da - a)) * (nv ** b) * (dv ** (db - b))
        return num, (du ** da) * (dv ** db)

    def pretty(self, names: tuple[str, str] = ("x", "y")) -> str:
        parts = []
        for (a, b), c in sorted(self.terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0][1], kv[0][0])):
            mono = ""
            if a:
                mono += names[0] + (f"^{a}" if a > 1 else "")
            if b:
                mono += names[1] + (f"^{b}" if b > 1 else "")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}{mono}")
        return " + ".join(parts).replace("+ -", "- ") or "0"

    def __repr__(self) -> str:
        return f"BivariatePolynomial({self.pretty()})"

    def matrix(self, n: int) -> list[list]:
        """Coefficients arranged as an (n+1) x (n+1) matrix indexed [b][a]."""
        return [[self.coeff(a, b) for a in range(n + 1)] for b in range(n + 1)]


def _as_bi(x) -> BivariatePolynomial:
    return x if isinstance(x, BivariatePolynomial) else BivariatePolynomial.const(x)


def parse_bivariate(text: str, names: tuple[str, str]) -> BivariatePolynomial:
    """Parse sums of monomials such as ``5-12y+7y^2+6xy`` (implicit products)."""
    s = text.replace(" ", "").replace("*", "")
    if s and s[0] not in "+-":
        s = "+" + s
    out = BivariatePolynomial()
    i = 0
    while i < len(s):
        sign = 1 if s[i] == "+" else -1
        i += 1
        j = i
        while j < len(s) and s[j].isdigit():
            j += 1
        coeff = int(s[i:j]) if j > i else 1
        i = j
        exps = [0, 0]
        while i < len(s) and s[i] not in "+-":
            var = s[i]
            i += 1
            e = 1
            if i < len(s) and s[i] == "^":
                j = i + 1
                while j < len(s) and s[j].isdigit():
                    j += 1
                e = int(s[i + 1:j])
                i = j
            exps[names.index(var)] += e
        out = out + BivariatePolynomial({tuple(exps): sign * coeff})
    return out


def interpolate_bivariate(func, deg_u: int, deg_v: int) -> BivariatePolynomial:
    """Recover a polynomial of bidegree at most (deg_u, deg_v) from exact values.

    ``func(u, v)`` must return exact rationals on the integer grid used here.
    """
    us = list(range(2, deg_u + 3))
    vs = list(range(2, deg_v + 3))
    values = {(u, v): Fraction(func(Fraction(u), Fraction(v))) for u in us for v in vs}

    def lagrange(points, vals):
        # univariate interpolation returning coefficient list
        poly = IntPolynomial()
        for i, xi in enumerate(points):
            basis = IntPolynomial([1])
            denom = Fraction(1)
            for j, xj in enumerate(points):
                if j != i:
                    basis = basis * IntPolynomial([-xj, 1])
                    denom *= xi - xj
            poly = poly + basis * (vals[i] / denom)
        return poly

    # interpolate in v for each u, then in u coefficientwise
    rows = {u: lagrange(vs, [values[(u, v)] for v in vs]) for u in us}
    terms = {}
    for b in range(deg_v + 1):
        col = lagrange(us, [rows[u][b] for u in us])
        for a in range(deg_u + 1):
            if col[a]:
                terms[(a, b)] = col[a]
    return BivariatePolynomial(terms)


def binomial(n, r: int) -> int:
    """Binomial coefficient allowing negative upper index (generalized)."""
    if r < 0:
        return 0
    if isinstance(n, int) and n >= 0:
        return comb(n, r)
    num = 1
    for j in range(r):
        num *= n - j
    fact = 1
    for j in range(2, r + 1):
        fact *= j
    return num // fact if isinstance(num, int) else Fraction(num, fact)
