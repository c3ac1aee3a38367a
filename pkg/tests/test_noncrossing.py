import pytest

from fusscat import analytics as A
from fusscat.coxeter import (
    build_group,
    cycle_notation,
    element_from_type_a_permutation,
    parse_cycles,
    type_a_permutation,
)
from fusscat.noncrossing import (
    NCError,
    automorphism_table,
    build_nc,
    build_nck,
    covers_from,
    el_check_nck,
    horizontal_leq,
    integral_map,
    interval_product_check,
    is_log_concave,
    is_poset_automorphism,
    iterate_iso,
    kreweras,
    order_ideal_iso,
    parabolic_type_distribution,
    partial_map,
    topology_stats,
)


def nck_of(label, k):
    return build_nck(build_nc(build_group(label)), k)


def ids_by_name(nc):
    return {nc.element_name(i): i for i in range(len(nc))}


@pytest.mark.parametrize("label,size", [("A1", 2), ("A3", 14), ("H3", 32), ("B3", 20), ("D4", 50), ("I2(8)", 10)])
def test_nc_sizes(label, size):
    nc = build_nc(build_group(label))
    assert len(nc) == size
    assert nc.rank_sizes() == [int(x) for x in A.narayana_vector(label, 1)]


def test_kreweras_examples():
    g = build_group("A3")
    c = element_from_type_a_permutation(g, parse_cycles("(1,2,3,4)", 4))
    nc = build_nc(g, c)
    one = g.identity
    assert kreweras(nc, one, c, one) == c
    assert kreweras(nc, one, c, c) == one
    t = element_from_type_a_permutation(g, parse_cycles("(1,2)", 4))
    assert cycle_notation(type_a_permutation(g, kreweras(nc, one, c, t))) == "(2,3,4)"


def test_kreweras_is_a_bijection_of_order_two_squared():
    nc = build_nc(build_group("B3"))
    image = [nc.kreweras_id(i) for i in range(len(nc))]
    assert sorted(image) == list(range(len(nc)))
    assert all(nc.kreweras_inverse_id(nc.kreweras_id(i)) == i for i in range(len(nc)))


def test_partial_and_integral_maps():
    nck = nck_of("A2", 2)
    nc = nck.nc
    ids = ids_by_name(nc)
    top, bot = nc.top, nc.bottom
    assert partial_map(nck, (top, top)) == (top, bot, bot)
    assert partial_map(nck, (bot, bot)) == (bot, bot, top)
    d = partial_map(nck, (ids["(1,2)"], ids["(1,2,3)"]))
    assert [nc.element_name(x) for x in d] == ["(1,2)", "(2,3)", "()"]
    for e in nck.elements:
        assert integral_map(nck, partial_map(nck, e)) == e


def test_partial_map_rejects_non_chains():
    nck = nck_of("A2", 2)
    ids = ids_by_name(nck.nc)
    with pytest.raises(NCError):
        partial_map(nck, (ids["(1,2)"], ids["(2,3)"]))


@pytest.mark.parametrize("label,k,ranks", [("A2", 2, [5, 6, 1]), ("B2", 2, [6, 8, 1]), ("A2", 1, [1, 3, 1])])
def test_nck_rank_vectors(label, k, ranks):
    assert nck_of(label, k).rank_sizes() == ranks


def test_k1_is_nc():
    nc = build_nc(build_group("B3"))
    nck = build_nck(nc, 1)
    assert sorted(e[0] for e in nck.elements) == list(range(len(nc)))
    for a in range(len(nck)):
        for b in range(len(nck)):
            assert nck.leq(a, b) == nc.leq(nck.elements[a][0], nck.elements[b][0])


def test_nck_structure():
    nck = nck_of("A3", 2)
    P = nck.poset
    assert P.maximal_elements() == [nck.top()]
    mins = set(P.minimal_elements())
    assert mins == {i for i, e in enumerate(nck.elements) if e[0] == nck.nc.bottom}
    assert len(mins) == A.fuss_catalan("A3", 1)


def test_horizontal_order_agrees():
    nck = nck_of("B2", 2)
    for a in range(len(nck)):
        for b in range(len(nck)):
            assert horizontal_leq(nck, a, b) == nck.leq(a, b)


def test_cover_indices():
    nck = nck_of("A2", 2)
    ids = ids_by_name(nck.nc)
    x = nck.index[(ids["()"], ids["(1,2)"])]
    got = {nck.element_name(j): idx for j, idx, _ in covers_from(nck, x)}
    assert got == {"((1,2), (1,2))": 1, "((1,3), (1,2,3))": 2}
    assert covers_from(nck, nck.top()) == []


def test_covers_from_matches_hasse_diagram():
    nck = nck_of("B3", 2)
    for i in range(len(nck)):
        ups = sorted({j for j, _, _ in covers_from(nck, i)})
        assert ups == sorted(nck.poset.upper_covers[i])


@pytest.mark.parametrize("label,k", [("A2", 2), ("B2", 2), ("A3", 2), ("H3", 1)])
def test_automorphisms(label, k):
    nck = nck_of(label, k)
    h = build_group(label).coxeter_number
    for which in ("Lstar", "Rstar", "Cstar"):
        perm = automorphism_table(nck, which)
        assert is_poset_automorphism(nck.poset, perm)
    R = automorphism_table(nck, "Rstar")
    assert all(R[R[i]] == i for i in range(len(nck)))
    C = automorphism_table(nck, "Cstar")
    x = list(range(len(nck)))
    for _ in range(k * h):
        x = [C[i] for i in x]
    assert x == list(range(len(nck)))


def test_iterate_iso_small():
    nc = build_nc(build_group("A2"))
    rep = iterate_iso(nc, 1, 1)
    assert rep.ok and all(key == (v,) for key, v in rep.table.items())
    assert iterate_iso(nc, 2, 1).size == 12
    rep = iterate_iso(nc, 1, 2)
    assert rep.ok and rep.size == rep.target_size == 12


def test_order_ideals():
    nck = nck_of("A3", 2)
    nc = nck.nc
    top = order_ideal_iso(nck, nck.top())
    assert top.ok and len(top.ideal) == len(nck)
    some_min = nck.poset.minimal_elements()[0]
    assert len(order_ideal_iso(nck, some_min).ideal) == 1
    e = next(i for i, el in enumerate(nck.elements) if nc.element_name(el[0]) == "(1,2)")
    rep = order_ideal_iso(nck, e)
    assert rep.ok and len(rep.ideal) == 3 and rep.parabolic_type == ("A1",)


def test_topology_examples():
    s = topology_stats(nck_of("A2", 2))
    assert s["max_chain_count"] == 12
    assert s["euler_no_top"] == -2
    assert build_nc(build_group("A3")).poset.maximal_chain_count() == 16


@pytest.mark.parametrize("label,k", [("A2", 1), ("A2", 2), ("B2", 2), ("A3", 1)])
def test_el_labelling(label, k):
    assert el_check_nck(nck_of(label, k))


def test_interval_sizes_factor():
    nck = nck_of("A3", 1)
    P = nck.poset
    for a in range(len(nck)):
        for b in range(len(nck)):
            if P.leq(a, b):
                size, expected = interval_product_check(nck, a, b)
                assert size == expected


def test_rank_sizes_log_concave():
    assert is_log_concave(nck_of("B3", 2).rank_sizes())


def test_parabolic_distribution_trivial_count():
    for k in (1, 2):
        dist = parabolic_type_distribution(nck_of("A3", k))
        assert dist[()] == A.fuss_catalan("A3", k - 1)


def test_cap_refusal():
    from fusscat.config import CapExceeded, Caps, set_caps

    set_caps(Caps(max_poset=20))
    try:
        with pytest.raises(CapExceeded) as info:
            nck_of("A3", 2)
        assert info.value.cap == "max_poset"
    finally:
        set_caps(None)
