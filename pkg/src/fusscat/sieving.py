"""Cyclic sieving checks and the maximal-interval overlap statistic."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import analytics as A
from .cluster import build_cluster_complex
from .coxeter import CoxeterGroup, build_group
from .noncrossing import KDivisiblePoset, automorphism_table, build_nc, build_nck
from .posets import bits


def _group(G) -> CoxeterGroup:
    return build_group(G) if isinstance(G, str) else G


@dataclass
class SievingReport:
    which: str
    type: str
    k: int
    order: int
    size: int
    fixed: list
    evaluations: list

    @property
    def ok(self) -> bool:
        return self.fixed == self.evaluations

    def failures(self) -> list[int]:
        return [d for d, (a, b) in enumerate(zip(self.fixed, self.evaluations)) if a != b]

    def to_json(self) -> dict:
        return {"which": self.which, "type": self.type, "k": self.k, "order": self.order,
                "size": self.size, "fixed": self.fixed, "evaluations": self.evaluations,
                "status": "PASS" if self.ok else "FAIL"}


def _cycle_lengths(perm: list) -> list[int]:
    seen = [False] * len(perm)
    out = []
    for x in range(len(perm)):
        if not seen[x]:
            length, y = 0, x
            while not seen[y]:
                seen[y] = True
                y = perm[y]
                length += 1
            out.append(length)
    return out


def _cycle_fixed_counts(perm: list, order: int) -> list[int]:
    """Number of points fixed by perm^d for d = 0..order-1."""
    lengths = _cycle_lengths(perm)
    return [sum(L for L in lengths if d % L == 0) for d in range(order)]


def _perm_order(perm: list) -> int:
    from math import gcd

    out = 1
    for L in set(_cycle_lengths(perm)):
        out = out * L // gcd(out, L)
    return out


def sieving_nc(G, k: int, nck: KDivisiblePoset | None = None) -> SievingReport:
    """C* acting on NC_(k)(W) against q-Cat^(k)(W) at kh-th roots of unity."""
    g = _group(G)
    nck = nck or build_nck(build_nc(g), k)
    perm = automorphism_table(nck, "Cstar")
    order = k * g.coxeter_number
    if order % _perm_order(perm):
        raise ValueError("C* order does not divide kh")
    poly = A.q_fuss_catalan(g.name, k)
    return SievingReport("nc", g.name, k, order, len(perm), _cycle_fixed_counts(perm, order),
                         A.sieving_values(poly, order))


def sieving_clusters(G, k: int) -> SievingReport:
    """tau* acting on colored clusters against q-Cat^(k)(W) at (kh+2)-th roots.

    The d-th power of tau* is paired with the d-th power of a primitive
    (kh+2)-th root of unity. When w0 = -1, tau* has order (kh+2)/2 and acts
    through the quotient.
    """
    g = _group(G)
    C = build_cluster_complex(g, k)
    order = k * g.coxeter_number + 2
    index = {frozenset(f): i for i, f in enumerate(C.facets)}
    perm = [index[frozenset(C.tau_star[v] for v in f)] for f in C.facets]
    if order % _perm_order(perm):
        raise ValueError("tau* order does not divide kh+2")
    poly = A.q_fuss_catalan(g.name, k)
    return SievingReport("clusters", g.name, k, order, len(perm), _cycle_fixed_counts(perm, order),
                         A.sieving_values(poly, order))


def cyclic_sieving_check(which: str, G, k: int) -> SievingReport:
    if which == "nc":
        return sieving_nc(G, k)
    if which == "clusters":
        return sieving_clusters(G, k)
    raise ValueError(f"unknown sieving triple {which!r}")


# ----- overlap of maximal intervals ------------------------------------------
@dataclass
class OverlapReport:
    type: str
    k: int
    l: int
    i: int
    multichains: int
    expected: Fraction
    predicted: Fraction

    @property
    def ok(self) -> bool:
        return self.expected == self.predicted

    def to_json(self) -> dict:
        return {"type": self.type, "k": self.k, "l": self.l, "i": self.i,
                "multichains": self.multichains, "expected": str(self.expected),
                "predicted": str(self.predicted), "status": "PASS" if self.ok else "FAIL"}


def overlap_statistic(G, k: int, l: int, i: int, nck: KDivisiblePoset | None = None) -> OverlapReport:
    """Mean number of maximal intervals [m, top] containing an l-multichain of
    NC^(k)(W) whose bottom element has rank i, by exhaustive count."""
    g = _group(G)
    nck = nck or build_nck(build_nc(g), k)
    P = nck.poset
    rk = P.rank
    minimal = P.minimal_elements()
    # chains[x] = number of (l-1)-multichains starting at x, built by dynamic programming
    chains = [1] * P.size
    for _ in range(l - 1):
        chains = [sum(chains[y] for y in bits(P.up[x])) for x in range(P.size)]
    total, weighted = 0, 0
    for x in range(P.size):
        if rk[x] != i:
            continue
        below = sum(1 for m in minimal if P.leq(m, x))
        total += chains[x]
        weighted += chains[x] * below
    n = g.rank
    nar_k = A.narayana_vector(g.name, k)
    nar_1 = A.narayana_vector(g.name, 1)
    pred = Fraction(int(nar_k[n - i]), int(nar_1[n - i]))
    return OverlapReport(g.name, k, l, i, total, Fraction(weighted, total), pred)
