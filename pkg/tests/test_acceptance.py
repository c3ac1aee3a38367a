"""End-to-end acceptance checks, one test per criterion.

Each test prints a single PASS/FAIL line (also collected into the terminal
summary by conftest) before asserting.
"""

import time
from collections import Counter
from math import factorial

import pytest

from fusscat import analytics as A
from fusscat.checks import CONJ_PASS, run_check
from fusscat.classical import (
    SetPartition,
    count_by_type,
    count_rank_jump,
    enumerate_kdivisible,
    exhaustive_rank_jumps,
    exhaustive_type_counts,
    nabla,
    noncrossing_partitions,
    refinement_poset,
)
from fusscat.cluster import build_cluster_complex
from fusscat.coxeter import build_group
from fusscat.noncrossing import (
    build_nc,
    build_nck,
    el_check_nck,
    iterate_iso,
    nc_proper_part_euler,
    topology_stats,
)
from fusscat.nonnesting import floor_report, shi_chambers, type_comparison
from fusscat.polynomials import parse_bivariate
from fusscat.posets import LatticeOps
from fusscat.sieving import sieving_clusters, sieving_nc
from fusscat.triangles import triangles

DEGREES = {
    "A1": (2,), "A2": (2, 3), "A3": (2, 3, 4), "A4": (2, 3, 4, 5), "A5": (2, 3, 4, 5, 6),
    "B2": (2, 4), "B3": (2, 4, 6), "B4": (2, 4, 6, 8),
    "D3": (2, 3, 4), "D4": (2, 4, 4, 6),
    "H3": (2, 6, 10), "H4": (2, 12, 20, 30), "F4": (2, 6, 8, 12), "E6": (2, 5, 6, 8, 9, 12),
    **{f"I2({m})": (2, m) for m in range(3, 13)},
}

GRID4 = [(t, k) for t in ["A2", "A3", "B2", "B3", "I2(3)", "I2(4)", "I2(5)", "I2(6)", "H3"]
         for k in (1, 2, 3)]


def _sorted_degrees(t):
    return tuple(sorted(build_group(t).degrees))


def test_criterion_01_degrees(criterion):
    start = time.time()
    bad = []
    for t, expected in DEGREES.items():
        g = build_group(t)
        d = tuple(sorted(g.degrees))
        n, N, h = g.rank, g.num_positive, g.coxeter_number
        prod = 1
        for x in d:
            prod *= x
        if d != expected or prod != g.order or sum(d) != N + n or 2 * N != n * h:
            bad.append(t)
    elapsed = time.time() - start
    ok = not bad and elapsed < 60
    criterion(1, "degrees, |W| = prod d_i, sum d_i = N + n, N = nh/2", ok,
              f"{len(DEGREES)} types in {elapsed:.1f}s" + (f"; bad {bad}" if bad else ""))
    assert ok


def test_criterion_02_length_polynomial(criterion):
    types = ["A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "D4", "D5", "F4", "H3"]
    types += [f"I2({m})" for m in range(3, 13)]
    bad = []
    for t in types:
        g = build_group(t)
        assert g.order <= 10 ** 4
        _, p_t, _, formula_t = g.length_generating_polynomials()
        if p_t != formula_t:
            bad.append(t)
    ok = not bad
    criterion(2, "absolute length generating polynomial = prod (1 + (d_i - 1) q)", ok,
              f"{len(types)} groups with |W| <= 10^4")
    assert ok


def test_criterion_03_nc_counts(criterion):
    types = ["A1", "A2", "A3", "A4", "B2", "B3", "D4", "H3"] + [f"I2({m})" for m in range(3, 9)]
    bad = []
    sizes = {}
    for t in types:
        nc = build_nc(build_group(t))
        sizes[t] = len(nc)
        if len(nc) != A.fuss_catalan(t, 1) or not LatticeOps.compute(nc.poset).is_lattice:
            bad.append(t)
    spot = sizes["A3"] == 14 and sizes["B3"] == 20 and sizes["H3"] == 32 and sizes["D4"] == 50
    ok = not bad and spot
    criterion(3, "|NC(W)| = Cat(W) and NC(W) is a lattice", ok,
              f"A3={sizes['A3']} B3={sizes['B3']} H3={sizes['H3']} D4={sizes['D4']}")
    assert ok


def test_criterion_04_kdivisible_counts(criterion):
    start = time.time()
    bad = []
    for t, k in GRID4:
        nck = build_nck(build_nc(build_group(t)), k)
        nar = [int(x) for x in A.narayana_vector(t, k)]
        if len(nck) != A.fuss_catalan(t, k) or nck.rank_sizes() != nar:
            bad.append((t, k))
    example = build_nck(build_nc(build_group("A2")), 2)
    spot = len(example) == 12 and example.rank_sizes() == [5, 6, 1]
    elapsed = time.time() - start
    ok = not bad and spot and elapsed < 300
    criterion(4, "|NC^(k)(W)| = Cat^(k)(W), rank sizes = Nar^(k)(W, i)", ok,
              f"{len(GRID4)} cases in {elapsed:.1f}s")
    assert ok


def test_criterion_05_zeta_and_chains(criterion):
    bad = []
    for t in ["A2", "A3", "B2"]:
        nc = build_nc(build_group(t))
        for k in (1, 2, 3, 4):
            P = build_nck(nc, k).poset
            for l in range(1, 4 // k + 1):
                if P.count_multichains(l) != A.fuss_catalan(t, k * l):
                    bad.append((t, k, l))
    for t, k in GRID4:
        s = topology_stats(build_nck(build_nc(build_group(t)), k))
        if s["max_chain_count"] != s["expected_max_chain_count"]:
            bad.append(("chains", t, k))
    a3 = build_nc(build_group("A3")).poset.maximal_chain_count()
    a2 = build_nck(build_nc(build_group("A2")), 2).poset.maximal_chain_count()
    ok = not bad and a3 == 16 and a2 == 12
    criterion(5, "multichain counts = Cat^(kl), maximal chains = n!(kh)^n/|W|", ok,
              f"NC(A3) chains={a3}, NC^(2)(A2) chains={a2}")
    assert ok


def test_criterion_06_iterated_isomorphism(criterion):
    bad = []
    for t in ["A2", "B2"]:
        nc = build_nc(build_group(t))
        for k, l in [(1, 2), (2, 1), (2, 2)]:
            if not iterate_iso(nc, k, l).ok:
                bad.append((t, k, l))
    ok = not bad
    criterion(6, "(NC^(k))^(l) order-isomorphic to NC^(kl)", ok, f"failures {bad}" if bad else "6 cases")
    assert ok


def _nabla_check(n: int, k: int) -> bool:
    parts = noncrossing_partitions(n, 1)
    if k == 1:
        chains = [[p] for p in parts]
    else:
        P = refinement_poset(parts)
        chains = [[parts[i] for i in ch] for ch in P.iter_multichains(k)]
    images = [nabla(c) for c in chains]
    target = set(noncrossing_partitions(k * n, k))
    if len(set(images)) != len(images) or set(images) != target:
        return False
    return all(len(im) == len(c[0]) and im.k_type(k) == c[0].type() for im, c in zip(images, chains))


def test_criterion_07_classical_isomorphisms(criterion):
    from fusscat.classical import algebraic_isomorphism

    cases = [(n, k) for k in range(1, 13) for n in range(1, 13) if k * n <= 12]
    bad = [(n, k) for n, k in cases if not _nabla_check(n, k)]
    for n, k in [(3, 2), (4, 2), (3, 3)]:
        if not algebraic_isomorphism(n, k).ok:
            bad.append(("algebraic", n, k))
    chain = [SetPartition.singletons(range(1, 5)), SetPartition.of([[1, 2], [3, 4]]),
             SetPartition.full(range(1, 5))]
    example = nabla(chain).to_json() == [[1, 5, 12], [2, 3, 4], [6, 7, 11], [8, 9, 10]]
    ok = not bad and example
    criterion(7, "nabla bijects k-multichains of NC(n) with NC^(k)(n), rank and type preserved", ok,
              f"{len(cases)} (n,k) with kn <= 12; worked example {'ok' if example else 'wrong'}")
    assert ok


def _jump_and_type_ok(n, k, l, typeB):
    P = enumerate_kdivisible(n, k, typeB)
    jumps = exhaustive_rank_jumps(P, l)
    if any(count_rank_jump(n, k, l, j, typeB) != v for j, v in jumps.items()):
        return False
    total = sum(jumps.values())
    # every admissible jump vector (including zero counts) must be covered
    if total != P.poset.count_multichains(l):
        return False
    types = exhaustive_type_counts(P, l)
    for lam, v in types.items():
        lam = tuple(x for x in lam if x)
        if typeB and not lam:
            continue
        if count_by_type(lam, n, k, l, typeB) != v:
            return False
    return True


def test_criterion_08_rank_jump_and_type(criterion):
    bad = []
    for n in range(1, 9):
        for k in range(1, 9):
            if k * n <= 8 and n >= 2:
                for l in (1, 2):
                    if not _jump_and_type_ok(n, k, l, False):
                        bad.append(("A", n, k, l))
    for n in range(1, 7):
        for k in range(1, 7):
            if k * n <= 6 and n >= 2:
                for l in (1, 2):
                    if not _jump_and_type_ok(n, k, l, True):
                        bad.append(("B", n, k, l))
    ok = not bad
    criterion(8, "rank-jump and k-type counts match the closed forms (types A and B)", ok,
              f"failures {bad}" if bad else "type A kn <= 8, type B kn <= 6, l <= 2")
    assert ok


def test_criterion_09_shi_geometry(criterion):
    start = time.time()
    cases = [("A2", 1), ("A2", 2), ("A2", 3), ("A3", 1), ("A3", 2), ("B2", 1), ("B2", 2), ("I2(6)", 1)]
    bad = []
    for t, k in cases:
        ch = shi_chambers(t, k)
        bounded = sum(1 for c in ch if c.bounded)
        if len(ch) != A.fuss_catalan(t, k) or bounded != A.positive_fuss_catalan(t, k):
            bad.append((t, k))
    ch = shi_chambers("A2", 2)
    a1, a2, a12 = 0, 1, 2
    target = [c for c in ch if c.filter_chain().filters == ((1 << a1) | (1 << a12), 1 << a12)]
    walls = {(w.root, w.level, w.floor) for w in target[0].walls} if len(target) == 1 else set()
    example = walls == {(a2, 1, False), (a1, 2, False), (a12, 2, True)}
    fl2 = Counter(len(c.floors(2)) for c in ch)
    dist = [fl2[i] for i in range(3)] == [5, 6, 1]
    elapsed = time.time() - start
    ok = not bad and example and dist and elapsed < 600
    criterion(9, "positive Shi chambers = Cat^(k), bounded = Cat_+^(k), worked floors", ok,
              f"A2 k=2: {len(ch)}/{sum(c.bounded for c in ch)}, FL_2 {[fl2[i] for i in range(3)]}, {elapsed:.1f}s")
    assert ok


def test_criterion_10_cluster_complexes(criterion):
    bad = []
    for t, k in GRID4:
        C = build_cluster_complex(t, k)
        nar = [int(x) for x in A.narayana_vector(t, k)]
        if (len(C.facets) != A.fuss_catalan(t, k)
                or len(C.positive_facets()) != A.positive_fuss_catalan(t, k)
                or C.h_vector != nar[::-1]):
            bad.append((t, k))
    c22 = build_cluster_complex("A2", 2)
    c3 = build_cluster_complex("A3", 1)
    spot = c22.f_vector == [1, 8, 12] and c22.h_vector == [1, 6, 5] and c3.f_vector == [1, 9, 21, 14]
    ok = not bad and spot
    criterion(10, "cluster facets = Cat^(k), positive = Cat_+^(k), h = Nar^(k)", ok,
              f"D^(2)(A2) f={c22.f_vector} h={c22.h_vector}, D(A3) f={c3.f_vector}")
    assert ok


def test_criterion_11_triangles(criterion):
    T = triangles("A2", 2)
    M = parse_bivariate("5 - 12y + 7y^2 + 6xy - 6xy^2 + x^2y^2", ("x", "y"))
    H = parse_bivariate("5 + 2t + 4st + s^2t^2", ("s", "t"))
    F = parse_bivariate("1 + 6p + 2q + 7p^2 + 4qp + q^2", ("p", "q"))
    printed = T.M == M and T.H == H and T.F == F
    bad = []
    for t in ["A2", "A3", "B2", "B3"]:
        for k in (1, 2):
            rec = run_check("triangles", t, k)
            if rec.status != CONJ_PASS:
                bad.append((t, k))
            if k == 1 and not all(triangles(t, 1).self_dual().values()):
                bad.append(("self-dual", t))
    ok = printed and not bad
    criterion(11, "A2 k=2 triangles as printed; transforms hold; k=1 self-dual", ok,
              f"failures {bad}" if bad else "8 transform cases, 4 self-dual cases")
    assert ok


def test_criterion_12_euler_characteristics(criterion):
    bad = []
    for t, k in GRID4:
        s = topology_stats(build_nck(build_nc(build_group(t)), k))
        if s["euler_no_top"] != s["expected_euler_no_top"]:
            bad.append((t, k))
    for t in ["A2", "A3", "B2", "B3", "I2(5)", "H3", "D4"]:
        g = build_group(t)
        if nc_proper_part_euler(build_nc(g)) != (-1) ** g.rank * A.positive_fuss_catalan(t, 1):
            bad.append(("proper", t))
    ok = not bad
    criterion(12, "reduced Euler characteristics of NC^(k) minus top and NC proper part", ok,
              f"failures {bad}" if bad else f"{len(GRID4)} + 7 cases")
    assert ok


def test_criterion_13_el_labelling(criterion):
    cases = [("A2", 1), ("A2", 2), ("A3", 1), ("B2", 1), ("B2", 2)]
    bad = [(t, k) for t, k in cases if not el_check_nck(build_nck(build_nc(build_group(t)), k))]
    ok = not bad
    criterion(13, "EL-labelling of NC_(k)(W) with a top adjoined", ok,
              f"failures {bad}" if bad else f"{len(cases)} cases")
    assert ok


def test_criterion_14_cyclic_sieving(criterion):
    bad = []
    for t in ["A2", "A3", "B2"]:
        for k in (1, 2):
            if not sieving_nc(t, k).ok:
                bad.append(("nc", t, k))
            if not sieving_clusters(t, k).ok:
                bad.append(("clusters", t, k))
    ok = not bad
    criterion(14, "cyclic sieving for C* on NC_(k) and tau* on clusters", ok,
              f"failures {bad}" if bad else "12 triples, every power")
    assert ok


def test_criterion_15_equidistribution(criterion):
    bad = []
    for t in ["A2", "A3", "B2", "B3"]:
        if not type_comparison(t, 1).equal:
            bad.append(("types", t))
    for t in ["A2", "A3"]:
        for k in (1, 2):
            if not floor_report(t, k).nc_nar_observed:
                bad.append(("floors", t, k))
    ok = not bad
    criterion(15, "parabolic types of NC and NN agree; k-colored floors give Nar^(k)", ok,
              f"failures {bad}" if bad else "4 type cases, 4 floor cases")
    assert ok
