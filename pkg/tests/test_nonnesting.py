from collections import Counter

import pytest

from fusscat import analytics as A
from fusscat.nonnesting import (
    NNError,
    FilterChain,
    antichain_size_distribution,
    antichain_subspace_map,
    antichains,
    arrangement_chambers,
    build_root_poset,
    candidate_noncrystal_root_posets,
    filter_multichains,
    filter_poset,
    filters,
    floor_report,
    geometric_multichains,
    indecomposables,
    is_distributive_filter_lattice,
    is_geometric,
    shi_chambers,
    type_comparison,
)

A1, A2_, A12 = 0, 1, 2  # root indices in A2


def test_root_poset_a2():
    RP = build_root_poset("A2")
    assert RP.size == 3
    assert RP.poset.leq(A1, A12) and RP.poset.leq(A2_, A12)
    assert sorted(RP.simple()) == [A1, A2_]


def test_root_poset_small_types():
    assert build_root_poset("A1").size == 1
    B2 = build_root_poset("B2")
    assert B2.size == 4 and sorted(B2.heights) == [1, 1, 2, 3]


@pytest.mark.parametrize("label", ["A3", "B3", "D4", "G2"])
def test_root_poset_properties(label):
    RP = build_root_poset(label)
    assert sorted(RP.poset.minimal_elements()) == sorted(RP.simple())
    assert len(RP.poset.maximal_elements()) == 1


def test_noncrystallographic_rejected():
    with pytest.raises(NNError):
        build_root_poset("H3")


def test_antichain_counts():
    assert len(antichains(build_root_poset("A2"))) == 5
    assert antichain_size_distribution(build_root_poset("A3")) == [1, 6, 6, 1]
    assert len(filters(build_root_poset("B2"))) == 6


@pytest.mark.parametrize("label", ["A3", "B3", "D4", "F4"])
def test_antichains_count_catalan_and_narayana(label):
    RP = build_root_poset(label)
    assert len(antichains(RP)) == A.fuss_catalan(label, 1)
    assert antichain_size_distribution(RP) == [int(x) for x in A.narayana_vector(label, 1)][::-1] or \
        antichain_size_distribution(RP) == [int(x) for x in A.narayana_vector(label, 1)]


def test_filter_lattice_distributive():
    for label in ["A3", "B3", "D4"]:
        assert is_distributive_filter_lattice(build_root_poset(label))


def test_antichain_subspace_map():
    assert antichain_subspace_map(build_root_poset("B3")) == {"injective": True, "independent": True}


def test_geometric_multichains_a2():
    RP = build_root_poset("A2")
    geo = geometric_multichains(RP, 2)
    every = filter_multichains(RP, 2)
    assert len(geo) == 12 and len(every) == 14
    excluded = {c.filters for c in every if c not in geo}
    full = (1 << A1) | (1 << A2_) | (1 << A12)
    assert excluded == {(1 << A12, 1 << A12), (full, 0)}


def test_k1_filters_all_geometric():
    RP = build_root_poset("B3")
    assert all(is_geometric(RP, c) for c in filter_multichains(RP, 1))


@pytest.mark.parametrize("label,k", [("A2", 1), ("A2", 2), ("A2", 3), ("B2", 2), ("G2", 2), ("A3", 2)])
def test_shi_counts(label, k):
    ch = shi_chambers(label, k)
    assert len(ch) == A.fuss_catalan(label, k)
    assert sum(1 for c in ch if c.bounded) == A.positive_fuss_catalan(label, k)


def test_shi_chambers_match_geometric_chains():
    for label, k in [("A2", 2), ("B2", 2), ("A3", 2)]:
        RP = build_root_poset(label)
        chambers = {c.filter_chain() for c in shi_chambers(label, k)}
        assert chambers == set(geometric_multichains(RP, k))


def test_whole_arrangement_a2():
    ch = arrangement_chambers("A2", 2)
    assert len(ch) == 49
    assert sum(1 for c in ch if c.bounded) == 25


def test_worked_chamber():
    ch = shi_chambers("A2", 2)
    target = FilterChain(((1 << A1) | (1 << A12), 1 << A12))
    (c,) = [c for c in ch if c.filter_chain() == target]
    assert c.floors(2) == {A12} and c.floors(1) == frozenset()
    assert c.ceilings(1) == {A2_} and c.ceilings(2) == {A1}


def test_fundamental_chamber_has_no_colored_floors():
    ch = shi_chambers("A2", 2)
    (c,) = [c for c in ch if all(m == 0 for m in c.levels)]
    assert all(not c.floors(i) for i in (1, 2))


def test_floor_distribution():
    ch = shi_chambers("A2", 2)
    dist = Counter(len(c.floors(2)) for c in ch)
    assert [dist[i] for i in range(3)] == [5, 6, 1]


@pytest.mark.parametrize("label,k", [("A2", 2), ("A3", 2), ("B3", 2), ("G2", 3)])
def test_floor_conjectures(label, k):
    rep = floor_report(label, k)
    assert rep.nc_nar_observed
    assert rep.floors_equal_ceilings
    assert rep.fl_k_antichains


def test_indecomposables_match_geometry():
    RP = build_root_poset("B3")
    for c in shi_chambers("B3", 2):
        assert indecomposables(RP, c.filter_chain()) == c.floors(2)


def test_type_statistics():
    rep = type_comparison("A2", 1)
    assert rep.equal
    counts = sorted(rep.nn.values())
    assert counts == [1, 1, 3]
    rep3 = type_comparison("A3", 1)
    assert rep3.equal
    singles = [v for key, v in rep3.nn.items() if len(key) == 1]
    assert singles == [6]
    for k in (1, 2):
        assert type_comparison("B3", k).equal


def test_candidate_posets():
    reports = candidate_noncrystal_root_posets()
    assert [r.name for r in reports] == ["I2(5)", "I2(7)", "I2(8)", "H3"]
    assert all(r.ok for r in reports)
    for r in reports[:3]:
        m = int(r.name[3:-1])
        assert r.antichain_count == m + 2
        assert r.h_triangle == {(0, 0): 1, (1, 1): 2, (0, 1): m - 2, (2, 2): 1}
    assert reports[3].antichain_count == 32


def test_filter_poset_is_graded():
    F = filter_poset(build_root_poset("A3"))
    assert F.is_graded() and F.size == 14
