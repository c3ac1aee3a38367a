"""M-, H- and F-triangles computed from the three Fuss-Catalan structures."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import analytics as A
from .cluster import ClusterComplex, build_cluster_complex
from .coxeter import CoxeterGroup, build_group
from .noncrossing import KDivisiblePoset, build_nc, build_nck
from .polynomials import BivariatePolynomial


def _group(G) -> CoxeterGroup:
    return build_group(G) if isinstance(G, str) else G


def _poly(counts: Counter) -> BivariatePolynomial:
    return BivariatePolynomial({key: v for key, v in counts.items() if v})


def m_triangle(nck: KDivisiblePoset) -> BivariatePolynomial:
    """sum over u <= v in NC^(k) of mu(u, v) x^rk(u) y^rk(v).

    Equivalently, pairs of delta sequences in NC_(k) weighted by
    x^(n - rk) y^(n - rk) in that (dual) poset.
    """
    P = nck.poset
    rk = P.rank
    out: Counter = Counter()
    for u in range(P.size):
        for v, mu in P.mobius_row(u).items():
            out[(rk[u], rk[v])] += mu
    return _poly(out)


def h_triangle(chambers, k: int, n: int) -> BivariatePolynomial:
    """sum over positive Shi chambers of s^|FL_k ∩ simple| t^|FL_k|."""
    out: Counter = Counter()
    for c in chambers:
        fl = c.floors(k)
        out[(sum(1 for j in fl if j < n), len(fl))] += 1
    return _poly(out)


def _face_counts(C: ClusterComplex, weight=None) -> Counter:
    N = C.group.num_positive
    out: Counter = Counter()
    cross = C.crossing
    m = len(C.vertices)
    pos = [C.vertices[v][0] < N for v in range(m)]

    def rec(p, q, allowed, start):
        out[(p, q)] += 1
        for v in range(start, m):
            if allowed >> v & 1:
                rec(p + pos[v], q + (not pos[v]), allowed & ~cross[v] & ~(1 << v), v + 1)

    rec(0, 0, (1 << m) - 1, 0)
    return out


def f_triangle(C: ClusterComplex) -> BivariatePolynomial:
    """sum over faces A of p^|A+| q^|A-| (positive and negative simple vertices)."""
    return _poly(_face_counts(C))


def predicted_dual_f(C: ClusterComplex) -> BivariatePolynomial:
    """Faces weighted by Nar^(k)(W, |A|) / Nar^(1)(W, |A|)."""
    name = C.group.name
    nar_k = A.narayana_vector(name, C.k)
    nar_1 = A.narayana_vector(name, 1)
    out = {}
    for (p, q), cnt in _face_counts(C).items():
        out[(p, q)] = Fraction(nar_k[p + q] * cnt, nar_1[p + q])
    return BivariatePolynomial({key: (int(v) if v.denominator == 1 else v) for key, v in out.items()})


@dataclass
class TriangleSet:
    type: str
    k: int
    n: int
    M: BivariatePolynomial
    F: BivariatePolynomial
    H: Optional[BivariatePolynomial] = None
    H_from_M: bool = False
    extra: dict = field(default_factory=dict)

    def transforms(self) -> dict[str, bool]:
        return A.triangle_transform_report(self.M, self.H, self.F, self.n)

    def duals(self) -> dict:
        out = {"M": A.dual_m(self.M, self.n), "F": A.dual_f(self.F, self.n)}
        if self.H is not None:
            out["H"] = A.dual_h(self.H, self.n)
        return out

    def self_dual(self) -> dict[str, bool]:
        d = self.duals()
        out = {"M": d["M"] == self.M, "F": d["F"] == self.F}
        if self.H is not None:
            out["H"] = d["H"] == self.H
        return out

    def to_json(self) -> dict:
        out = {"type": self.type, "k": self.k,
               "M": self.M.pretty(("x", "y")), "F": self.F.pretty(("p", "q")),
               "H": self.H.pretty(("s", "t")) if self.H is not None else None,
               "H_from_M": self.H_from_M,
               "transforms": {k: ("PASS" if v else "FAIL") for k, v in sorted(self.transforms().items())}}
        d = self.duals()
        out["duals"] = {"M": d["M"].pretty(("x", "y")), "F": d["F"].pretty(("p", "q"))}
        if "H" in d:
            out["duals"]["H"] = d["H"].pretty(("s", "t"))
        out.update(self.extra)
        return out


def noncrystal_h(M: BivariatePolynomial, n: int) -> BivariatePolynomial:
    """H-triangle defined by inverting the M <-> H transform."""
    return A.h_from_m_polynomial(M, n)


def triangles(G, k: int, *, with_h: bool = True) -> TriangleSet:
    """All three triangles of type G. H comes from Shi chambers for Weyl groups
    of rank <= 3 and from the M-triangle otherwise."""
    from .config import caps

    g = _group(G)
    n = g.rank
    nck = build_nck(build_nc(g), k)
    M = m_triangle(nck)
    C = build_cluster_complex(g, k)
    F = f_triangle(C)
    H, from_m = None, False
    if with_h:
        if g.crystallographic and n <= caps().max_chamber_rank:
            from .nonnesting import shi_chambers

            H = h_triangle(shi_chambers(g, k), k, n)
        else:
            H, from_m = noncrystal_h(M, n), True
    return TriangleSet(g.name, k, n, M, F, H, from_m)


def dual_f_conjecture(C: ClusterComplex) -> dict:
    F = f_triangle(C)
    dual = A.dual_f(F, C.n)
    pred = predicted_dual_f(C)
    return {"dual_F": dual.pretty(("p", "q")), "predicted": pred.pretty(("p", "q")),
            "status": "PASS" if dual == pred else "FAIL"}
