"""Theorem and conjecture check suites producing machine-readable records.

Each record is ``{id, parameters, status, value, expected, witness}`` with status
one of THEOREM_PASS, THEOREM_FAIL, CONJ_PASS, CONJ_FAIL, SKIPPED. Witnesses are
only filled in on failure (or with the reason for a skip).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from . import analytics as A
from .config import CapExceeded
from .coxeter import CoxeterGroup, build_group

THEOREM_PASS, THEOREM_FAIL = "THEOREM_PASS", "THEOREM_FAIL"
CONJ_PASS, CONJ_FAIL, SKIPPED = "CONJ_PASS", "CONJ_FAIL", "SKIPPED"


@dataclass
class CheckParams:
    type: str
    k: int = 1
    l: int = 1
    i: Optional[int] = None

    def as_dict(self) -> dict:
        out = {"type": self.type, "k": self.k, "l": self.l}
        if self.i is not None:
            out["i"] = self.i
        return out


@dataclass
class CheckRecord:
    id: str
    parameters: dict
    status: str
    value: object = None
    expected: object = None
    witness: object = None

    def to_json(self) -> dict:
        return {"id": self.id, "parameters": self.parameters, "status": self.status,
                "value": self.value, "expected": self.expected, "witness": self.witness}


@dataclass
class Suite:
    name: str
    theorem: bool
    run: Callable[[CoxeterGroup, CheckParams], tuple]
    description: str = ""


def _record(suite: Suite, params: CheckParams, ok: bool, value, expected, witness=None) -> CheckRecord:
    if suite.theorem:
        status = THEOREM_PASS if ok else THEOREM_FAIL
    else:
        status = CONJ_PASS if ok else CONJ_FAIL
    return CheckRecord(suite.name, params.as_dict(), status, value, expected, None if ok else witness)


# ----- suite bodies: each returns (ok, value, expected, witness) ------------------

def _nck(g, k):
    from .noncrossing import build_nc, build_nck

    return build_nck(build_nc(g), k)


def _zeta(g, p):
    P = _nck(g, p.k).poset
    value = P.count_multichains(p.l)
    expected = int(A.fuss_catalan(g.name, p.k * p.l))
    return value == expected, value, expected, {"multichains": value}


def _iterate(g, p):
    from .noncrossing import build_nc, iterate_iso

    rep = iterate_iso(build_nc(g), p.k, p.l)
    witness = {"bijective": rep.bijective, "inverse_ok": rep.inverse_ok,
               "order_preserving": rep.order_preserving}
    return rep.ok, rep.size, rep.target_size, witness


def _mainisom(g, p):
    from .classical import algebraic_isomorphism

    if g.crystallographic and g.name[0] == "A":
        rep = algebraic_isomorphism(g.rank + 1, p.k)
    elif g.name[0] == "B":
        rep = algebraic_isomorphism(g.rank, p.k, typeB=True)
    else:
        raise _Skip("classical model exists only for types A and B")
    witness = {"bijective": rep.bijective, "order_preserving": rep.order_preserving,
               "rank_preserving": rep.rank_preserving, "type_preserving": rep.type_preserving}
    return rep.ok, rep.size_classical, rep.size_algebraic, witness


def _kcluster(g, p):
    from .cluster import build_cluster_complex

    C = build_cluster_complex(g, p.k)
    value = {"facets": len(C.facets), "positive_facets": len(C.positive_facets()),
             "h_vector": C.h_vector}
    expected = {"facets": int(A.fuss_catalan(g.name, p.k)),
                "positive_facets": int(A.positive_fuss_catalan(g.name, p.k)),
                "h_vector": [int(x) for x in reversed(A.narayana_vector(g.name, p.k))]}
    return value == expected, value, expected, value


def _euler(g, p):
    from .noncrossing import topology_stats

    s = topology_stats(_nck(g, p.k))
    value, expected = s["euler_no_top"], int(s["expected_euler_no_top"])
    return value == expected, value, expected, s


def _shi(g, p):
    from .nonnesting import shi_chambers

    _need_crystallographic(g)
    ch = shi_chambers(g, p.k)
    value = {"chambers": len(ch), "bounded": sum(1 for c in ch if c.bounded)}
    expected = {"chambers": int(A.fuss_catalan(g.name, p.k)),
                "bounded": int(A.positive_fuss_catalan(g.name, p.k))}
    return value == expected, value, expected, value


def _triangles(g, p):
    from .triangles import triangles

    T = triangles(g, p.k)
    tr = T.transforms()
    ok = all(tr.values())
    return ok, {key: ("PASS" if v else "FAIL") for key, v in sorted(tr.items())}, None, T.to_json()


def _dual_f(g, p):
    from .cluster import build_cluster_complex
    from .triangles import dual_f_conjecture

    rep = dual_f_conjecture(build_cluster_complex(g, p.k))
    return rep["status"] == "PASS", rep["dual_F"], rep["predicted"], rep


def _mystery(g, p):
    from .classical import mystery_report

    if g.name[0] != "A" or not g.crystallographic:
        raise _Skip("the half-turn fixed poset is defined from type A partitions")
    n = g.rank + 1
    if (p.k * n) % 2:
        raise _Skip("kn is odd, so the half-turn is not an automorphism")
    rep = mystery_report(n, p.k, max_l=p.l)
    return rep.matches, rep.zeta_observed, rep.zeta_conjectured, {"size": rep.size}


def _need_crystallographic(g):
    if not g.crystallographic:
        raise _Skip("root poset and Shi arrangement need a crystallographic type")


def _nc_nn_narayana(g, p):
    from .nonnesting import floor_report

    _need_crystallographic(g)
    rep = floor_report(g, p.k)
    return rep.nc_nar_observed, rep.floor_vectors[p.k], rep.narayana, rep.to_json()


def _floors_ceilings(g, p):
    from .nonnesting import floor_report

    _need_crystallographic(g)
    rep = floor_report(g, p.k)
    return (rep.floors_equal_ceilings, {str(i): v for i, v in rep.floor_vectors.items()},
            {str(i): v for i, v in rep.ceiling_vectors.items()}, rep.to_json())


def _nck_nnk(g, p):
    from .nonnesting import type_comparison

    _need_crystallographic(g)
    rep = type_comparison(g, p.k)
    js = rep.to_json()
    return rep.equal, js["nn"], js["nc"], js


def _sieving(which):
    def run(g, p):
        from .sieving import cyclic_sieving_check

        rep = cyclic_sieving_check(which, g, p.k)
        return rep.ok, rep.fixed, rep.evaluations, {"failures": rep.failures()}

    return run


def _overlap(g, p):
    from .sieving import overlap_statistic

    ranks = [p.i] if p.i is not None else list(range(g.rank + 1))
    nck = _nck(g, p.k)
    reps = [overlap_statistic(g, p.k, p.l, i, nck) for i in ranks]
    value = {str(r.i): str(r.expected) for r in reps}
    expected = {str(r.i): str(r.predicted) for r in reps}
    return all(r.ok for r in reps), value, expected, [r.to_json() for r in reps]


class _Skip(Exception):
    pass


SUITES: dict[str, Suite] = {s.name: s for s in [
    Suite("zeta", True, _zeta, "multichain counts of NC^(k) against Cat^(kl)"),
    Suite("iterate", True, _iterate, "(NC^(k))^(l) isomorphic to NC^(kl)"),
    Suite("mainisom", True, _mainisom, "algebraic and classical k-divisible posets agree"),
    Suite("kcluster", True, _kcluster, "facets, positive facets and h-vector of the cluster complex"),
    Suite("euler", True, _euler, "reduced Euler characteristic of NC^(k) without its top"),
    Suite("shi", True, _shi, "positive and bounded positive Shi chambers"),
    Suite("triangles", False, _triangles, "M, H, F transform identities"),
    Suite("dual-f", False, _dual_f, "dual F-triangle against the Narayana-weighted face count"),
    Suite("mystery", False, _mystery, "zeta polynomial of the half-turn fixed poset"),
    Suite("nc-nn-narayana", False, _nc_nn_narayana, "colored floor statistic against Nar^(k)"),
    Suite("floors-ceilings", False, _floors_ceilings, "floors and ceilings equidistributed"),
    Suite("nck-nnk", False, _nck_nnk, "parabolic type statistics on NC^(k) and NN^(k)"),
    Suite("sieving-nc", False, _sieving("nc"), "cyclic sieving for C* on NC_(k)"),
    Suite("sieving-clusters", False, _sieving("clusters"), "cyclic sieving for tau* on clusters"),
    Suite("overlap", False, _overlap, "mean number of maximal intervals containing a multichain"),
]}


def run_check(name: str, G, k: int = 1, l: int = 1, i: Optional[int] = None) -> CheckRecord:
    suite = SUITES.get(name)
    if suite is None:
        raise KeyError(f"unknown check suite {name!r}")
    g = build_group(G) if isinstance(G, str) else G
    params = CheckParams(g.name, k, l, i)
    try:
        ok, value, expected, witness = suite.run(g, params)
    except _Skip as exc:
        return CheckRecord(name, params.as_dict(), SKIPPED, witness=str(exc))
    except CapExceeded as exc:
        return CheckRecord(name, params.as_dict(), SKIPPED, witness=str(exc))
    return _record(suite, params, ok, value, expected, witness)


def run_suites(names, groups, ks=(1,), ls=(1,), i: Optional[int] = None) -> list[CheckRecord]:
    out = []
    for name in names:
        for G in groups:
            for k in ks:
                for l in ls:
                    out.append(run_check(name, G, k, l, i))
    return out


def report(records) -> dict:
    recs = [r.to_json() for r in records]
    counts: dict = {}
    for r in recs:
        counts[r["status"]] = counts.get(r["status"], 0) + 1
    return {"records": recs, "summary": counts}


def has_theorem_failure(records) -> bool:
    return any(r.status == THEOREM_FAIL for r in records)
