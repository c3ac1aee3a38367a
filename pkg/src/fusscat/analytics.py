"""Closed-form Fuss-Catalan arithmetic, Chapoton triangle transforms and q-analogues.

Everything here is exact: integers, ``Fraction`` and the polynomial types of
:mod:`fusscat.polynomials`.  Functions accept either a built group or a type
label such as ``"E8"`` so that the closed forms remain usable for groups too
large to enumerate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod
from typing import Callable, Optional, Union

from .coxeter import CoxeterGroup, expected_degrees, parse_type
from .polynomials import (
    BivariatePolynomial,
    IntPolynomial,
    binomial,
    evaluate_at_root_of_unity,
    interpolate_bivariate,
)


@dataclass(frozen=True)
class GroupData:
    """Invariant data needed by the closed forms."""

    family: str
    rank: int
    m: Optional[int]
    degrees: tuple[int, ...]

    @property
    def name(self) -> str:
        return f"I2({self.m})" if self.family == "I2" else f"{self.family}{self.rank}"

    @property
    def h(self) -> int:
        return self.degrees[-1]

    @property
    def order(self) -> int:
        return prod(self.degrees)

    @property
    def num_positive(self) -> int:
        return sum(self.degrees) - self.rank


GroupLike = Union[CoxeterGroup, GroupData, str]


def group_data(W: GroupLike) -> GroupData:
    if isinstance(W, GroupData):
        return W
    if isinstance(W, CoxeterGroup):
        return GroupData(W.family, W.rank, W.m, W.degrees)
    family, rank, m = parse_type(W)
    return GroupData(family, rank, m, expected_degrees(family, rank, m))


def _as_int(x: Fraction, what: str):
    if isinstance(x, Fraction):
        if x.denominator != 1:
            raise ArithmeticError(f"{what} is not an integer: {x}")
        return int(x)
    return x


def fuss_catalan(W: GroupLike, k) -> int | Fraction:
    """Cat^(k)(W) = prod (kh + d_i)/d_i; integral for integer k >= 0."""
    g = group_data(W)
    val = Fraction(1)
    for d in g.degrees:
        val *= Fraction(k * g.h + d, d)
    return _as_int(val, "Cat") if val.denominator == 1 else val


def positive_fuss_catalan(W: GroupLike, k) -> int | Fraction:
    """Cat_+^(k)(W) = prod (kh + d_i - 2)/d_i."""
    g = group_data(W)
    val = Fraction(1)
    for d in g.degrees:
        val *= Fraction(k * g.h + d - 2, d)
    return int(val) if val.denominator == 1 else val


def fuss_catalan_polynomial(W: GroupLike) -> IntPolynomial:
    """Cat^(k)(W) as a polynomial in k (rational coefficients)."""
    g = group_data(W)
    out = IntPolynomial([1])
    for d in g.degrees:
        out = out * IntPolynomial([Fraction(1), Fraction(g.h, d)])
    return out


def _F(x, d=1) -> Fraction:
    return Fraction(x, d)


# Narayana polynomials for the exceptional and dihedral types, listed for
# ranks i = n, n-1, ..., 0.
def _exceptional_table(name: str, m: Optional[int] = None) -> list[Callable]:
    F = _F
    if name == "I2":
        return [lambda k: F(1), lambda k: F(m * k), lambda k: F(k * (m * k - m + 2), 2)]
    tables = {
        "H3": [
            lambda k: F(1),
            lambda k: F(15 * k),
            lambda k: F(5 * k * (5 * k - 2)),
            lambda k: F(k * (5 * k - 2) * (5 * k - 4), 3),
        ],
        "H4": [
            lambda k: F(1),
            lambda k: F(60 * k),
            lambda k: F(k * (465 * k - 149), 2),
            lambda k: F(15 * k * (3 * k - 1) * (5 * k - 3)),
            lambda k: F(k * (3 * k - 1) * (5 * k - 3) * (15 * k - 14), 4),
        ],
        "F4": [
            lambda k: F(1),
            lambda k: F(24 * k),
            lambda k: F(k * (78 * k - 23)),
            lambda k: F(12 * k * (3 * k - 1) * (2 * k - 1)),
            lambda k: F(k * (3 * k - 1) * (2 * k - 1) * (6 * k - 5), 2),
        ],
        "E6": [
            lambda k: F(1),
            lambda k: F(36 * k),
            lambda k: F(12 * k * (21 * k - 4)),
            lambda k: F(9 * k * (4 * k - 1) * (18 * k - 5)),
            lambda k: F(2 * k * (4 * k - 1) * (3 * k - 1) * (30 * k - 13)),
            lambda k: F(6 * k * (4 * k - 1) * (3 * k - 1) * (2 * k - 1) * (12 * k - 7), 5),
            lambda k: F(k * (4 * k - 1) * (3 * k - 1) * (2 * k - 1) * (12 * k - 7) * (6 * k - 5), 30),
        ],
        "E7": [
            lambda k: F(1),
            lambda k: F(63 * k),
            lambda k: F(21 * k * (63 * k - 11), 2),
            lambda k: F(21 * k * (9 * k - 2) * (27 * k - 7), 2),
            lambda k: F(21 * k * (9 * k - 2) * (3 * k - 1) * (63 * k - 23), 8),
            lambda k: F(3 * k * (9 * k - 2) * (3 * k - 1) * (9 * k - 4) * (207 * k - 103), 40),
            lambda k: F(9 * k * (9 * k - 2) * (3 * k - 1) * (9 * k - 4) * (9 * k - 5) * (3 * k - 2), 40),
            lambda k: F(k * (9 * k - 2) * (3 * k - 1) * (9 * k - 4) * (9 * k - 5) * (3 * k - 2) * (9 * k - 8), 280),
        ],
        "E8": [
            lambda k: F(1),
            lambda k: F(120 * k),
            lambda k: F(35 * k * (105 * k - 17), 2),
            lambda k: F(45 * k * (5 * k - 1) * (45 * k - 11)),
            lambda k: F(k * (5 * k - 1) * (10350 * k * k - 6675 * k + 1084), 2),
            lambda k: F(15 * k * (5 * k - 1) * (3 * k - 1) * (5 * k - 2) * (30 * k - 13)),
            lambda k: F(5 * k * (5 * k - 1) * (3 * k - 1) * (5 * k - 2) * (15 * k - 8) * (195 * k - 107), 48),
            lambda k: F(5 * k * (5 * k - 1) * (3 * k - 1) * (5 * k - 2) * (15 * k - 8) * (5 * k - 3)
                        * (15 * k - 11), 56),
            lambda k: F(k * (5 * k - 1) * (3 * k - 1) * (5 * k - 2) * (15 * k - 8) * (5 * k - 3)
                        * (15 * k - 11) * (15 * k - 14), 1344),
        ],
    }
    return tables[name]


def fuss_narayana(W: GroupLike, k, i: int) -> int | Fraction:
    """Nar^(k)(W, i): the number of rank-i elements of NC^(k)(W)."""
    g = group_data(W)
    n = g.rank
    if not 0 <= i <= n:
        raise ValueError(f"rank index {i} outside 0..{n}")
    fam = g.family
    if fam == "A":
        N = n + 1
        val = Fraction(binomial(N, i) * binomial(k * N, N - i - 1), N)
    elif fam == "B":
        val = Fraction(binomial(n, i) * binomial(k * n, n - i))
    elif fam == "D":
        val = Fraction(binomial(n, i) * binomial(k * (n - 1), n - i)
                       + binomial(n - 2, i) * binomial(k * (n - 1) + 1, n - i))
    elif fam == "I2":
        val = _exceptional_table("I2", g.m)[n - i](k)
    else:
        val = _exceptional_table(g.name)[n - i](k)
    return int(val) if val.denominator == 1 else val


def narayana_vector(W: GroupLike, k) -> list:
    g = group_data(W)
    return [fuss_narayana(g, k, i) for i in range(g.rank + 1)]


def narayana_polynomial_in_k(W: GroupLike, i: int) -> IntPolynomial:
    """Nar^(k)(W, i) as a polynomial in k, recovered by exact interpolation."""
    g = group_data(W)
    deg = g.rank - i + 1
    pts = list(range(1, deg + 2))
    out = IntPolynomial()
    for a, xa in enumerate(pts):
        basis = IntPolynomial([1])
        den = Fraction(1)
        for b, xb in enumerate(pts):
            if a != b:
                basis = basis * IntPolynomial([-xb, 1])
                den *= xa - xb
        out = out + basis * (Fraction(fuss_narayana(g, xa, i)) / den)
    return out


def kirkman_cayley(n: int, k: int, i: int) -> int:
    """Faces of cardinality i of the k-divisible cluster complex of type A_{n-1}."""
    if not 0 <= i <= n - 1:
        raise ValueError("i must lie in 0..n-1")
    num = comb(n - 1, i) * comb(k * n + i + 1, i)
    if num % (i + 1):
        raise ArithmeticError("non-integral face count")
    return num // (i + 1)


# ----- q-analogues ---------------------------------------------------------

def q_fuss_catalan(W: GroupLike, k: int) -> IntPolynomial:
    """prod [kh + d_i]_q / [d_i]_q by exact polynomial division."""
    g = group_data(W)
    num = IntPolynomial([1])
    for d in g.degrees:
        num = num * IntPolynomial.q_integer(k * g.h + d)
    for d in g.degrees:
        num = num.exact_div(IntPolynomial.q_integer(d))
    return num


def q_fuss_catalan_report(W: GroupLike, k: int) -> dict:
    g = group_data(W)
    try:
        poly = q_fuss_catalan(g, k)
    except ArithmeticError as exc:
        return {"polynomial": None, "integral": False, "nonnegative": False, "error": str(exc)}
    return {"polynomial": list(poly.coeffs), "integral": poly.is_integral(),
            "nonnegative": poly.is_nonnegative(), "value_at_1": poly(1)}


def sieving_values(poly: IntPolynomial, order: int) -> list[int]:
    """Evaluations of poly at exp(2 pi i p / order) for p = 0..order-1."""
    return [evaluate_at_root_of_unity(poly, order, p) for p in range(order)]


# ----- Chapoton triangles ----------------------------------------------------

X = BivariatePolynomial.var(0)
Y = BivariatePolynomial.var(1)
ONE = BivariatePolynomial.const(1)


def _frac(num, den=None):
    return (num, den if den is not None else ONE)


def _rational_equal(lhs: tuple, rhs: tuple) -> bool:
    """Compare num1/den1 and num2/den2 by cross multiplication."""
    return lhs[0] * rhs[1] == rhs[0] * lhs[1]


def _scale(frac: tuple, factor: BivariatePolynomial) -> tuple:
    return (frac[0] * factor, frac[1])


def m_from_f(F: BivariatePolynomial, n: int) -> tuple:
    """(xy-1)^n F((1-y)/(xy-1), 1/(xy-1)) as (num, den)."""
    d = X * Y - 1
    return _scale(F.substitute(_frac(1 - Y, d), _frac(ONE, d)), d ** n)


def m_from_h(H: BivariatePolynomial, n: int) -> tuple:
    """(1-y)^n H(x/(x-1), y(x-1)/(1-y))."""
    return _scale(H.substitute(_frac(X, X - 1), _frac(Y * (X - 1), 1 - Y)), (1 - Y) ** n)


def h_from_m(M: BivariatePolynomial, n: int) -> tuple:
    """(1+(s-1)t)^n M(s/(s-1), (s-1)t/(1+(s-1)t)) in variables (s, t) = (X, Y)."""
    s, t = X, Y
    e = 1 + (s - 1) * t
    return _scale(M.substitute(_frac(s, s - 1), _frac((s - 1) * t, e)), e ** n)


def h_from_f(F: BivariatePolynomial, n: int) -> tuple:
    """(t-1)^n F(1/(t-1), (1+(s-1)t)/(t-1))."""
    s, t = X, Y
    return _scale(F.substitute(_frac(ONE, t - 1), _frac(1 + (s - 1) * t, t - 1)), (t - 1) ** n)


def f_from_m(M: BivariatePolynomial, n: int) -> tuple:
    """q^n M((1+q)/(q-p), (q-p)/q) in variables (p, q) = (X, Y)."""
    p, q = X, Y
    return _scale(M.substitute(_frac(1 + q, q - p), _frac(q - p, q)), q ** n)


def f_from_h(H: BivariatePolynomial, n: int) -> tuple:
    """p^n H((1+q)/(1+p), (1+p)/p)."""
    p, q = X, Y
    return _scale(H.substitute(_frac(1 + q, 1 + p), _frac(1 + p, p)), p ** n)


def triangle_transform_report(M: BivariatePolynomial, H: Optional[BivariatePolynomial],
                              F: BivariatePolynomial, n: int) -> dict[str, bool]:
    """Check the three conjectured identities linking the M, H and F triangles."""
    out = {"M=F-transform": _rational_equal(_frac(M), m_from_f(F, n)),
           "F=M-transform": _rational_equal(_frac(F), f_from_m(M, n))}
    if H is not None:
        out["M=H-transform"] = _rational_equal(_frac(M), m_from_h(H, n))
        out["H=M-transform"] = _rational_equal(_frac(H), h_from_m(M, n))
        out["H=F-transform"] = _rational_equal(_frac(H), h_from_f(F, n))
        out["F=H-transform"] = _rational_equal(_frac(F), f_from_h(H, n))
    return out


def rational_to_polynomial(frac: tuple, degree: int) -> BivariatePolynomial:
    """Turn an exact quotient known to be a polynomial into one, and verify it."""
    num, den = frac
    poly = interpolate_bivariate(lambda u, v: Fraction(num(u, v)) / Fraction(den(u, v)), degree, degree)
    if not _rational_equal(_frac(poly), frac):
        raise ArithmeticError("quotient is not a polynomial of the expected degree")
    return poly


def dual_m(M: BivariatePolynomial, n: int) -> BivariatePolynomial:
    """(xy)^n M(1/y, 1/x)."""
    return BivariatePolynomial({(n - b, n - a): c for (a, b), c in M.terms.items()})


def dual_h(H: BivariatePolynomial, n: int) -> BivariatePolynomial:
    """t^n H(1 + (s-1)t, 1/t)."""
    s, t = X, Y
    out = BivariatePolynomial()
    for (a, b), c in H.terms.items():
        out = out + c * (1 + (s - 1) * t) ** a * t ** (n - b)
    return out


def dual_f(F: BivariatePolynomial, n: int) -> BivariatePolynomial:
    """(-1)^n F(-1-p, -1-q)."""
    out = BivariatePolynomial()
    for (a, b), c in F.terms.items():
        out = out + c * (-1 - X) ** a * (-1 - Y) ** b
    return out * ((-1) ** n)


def h_from_m_polynomial(M: BivariatePolynomial, n: int) -> BivariatePolynomial:
    """The H-triangle defined through the M-triangle (used for non-Weyl groups)."""
    return rational_to_polynomial(h_from_m(M, n), n)


def average_rank(W: GroupLike, k) -> Fraction:
    g = group_data(W)
    nar = narayana_vector(g, k)
    return Fraction(sum(i * x for i, x in enumerate(nar)), sum(nar))
