from collections import Counter

import pytest

from fusscat import analytics as A
from fusscat.classical import (
    PartitionError,
    SetPartition,
    SignedSetPartition,
    algebraic_isomorphism,
    all_set_partitions,
    classical_kreweras,
    count_by_type,
    count_rank_jump,
    enumerate_kdivisible,
    exhaustive_rank_jumps,
    exhaustive_type_counts,
    is_noncrossing,
    is_nonnesting,
    kreweras_complement,
    mystery_poset,
    mystery_report,
    nabla,
    noncrossing_partitions,
    orbit_partition,
    parse_partition,
    perm_partition_iso,
    shuffle,
)
from fusscat.coxeter import build_group, element_from_type_a_permutation, type_a_permutation
from fusscat.noncrossing import build_nc, kreweras

P = SetPartition.of


def test_canonical_form():
    assert P([[4, 2], [3], [1]]).to_json() == [[1], [2, 4], [3]]
    assert parse_partition("{{3},{1,2}}") == P([[1, 2], [3]])


def test_crossing_and_nesting_examples():
    assert is_noncrossing(P([[1, 2, 4], [3], [5, 6]]))
    assert not is_noncrossing(P([[1, 2, 4], [3, 5], [6]]))
    assert is_nonnesting(P([[1, 4], [2, 5, 6], [3]]))
    assert not is_nonnesting(P([[1, 4], [2, 3]]))


def test_permutation_to_partition():
    forward = perm_partition_iso(8, direction="forward")
    assert forward((1, 2, 3, 4)) == SetPartition.singletons(range(1, 5))
    assert forward((2, 3, 4, 1)) == SetPartition.full(range(1, 5))
    # (124)(376)(58)
    sigma = (2, 4, 7, 1, 8, 3, 6, 5)
    assert orbit_partition(sigma).to_json() == [[1, 2, 4], [3, 6, 7], [5, 8]]
    with pytest.raises(PartitionError):
        perm_partition_iso(4, direction="sideways")


def test_kreweras_examples():
    K = classical_kreweras(P([[1, 5, 6], [2, 3], [4], [7], [8]]))
    assert K.to_json() == [[1, 3, 4], [2], [5], [6, 7, 8]]
    assert classical_kreweras(SetPartition.singletons(range(1, 6))) == SetPartition.full(range(1, 6))


def test_kreweras_agrees_with_group_complement():
    g = build_group("A3")
    c = element_from_type_a_permutation(g, (2, 3, 4, 1))
    nc = build_nc(g, c)
    part = lambda w: orbit_partition(type_a_permutation(g, w))
    for w in nc.elements:
        assert classical_kreweras(part(w)) == part(kreweras(nc, g.identity, c, w))


def test_kreweras_is_bijective_and_inverted():
    parts = noncrossing_partitions(6)
    images = [kreweras_complement(Q) for Q in parts]
    assert len(set(images)) == len(parts)
    assert all(kreweras_complement(kreweras_complement(Q), inverse=True) == Q for Q in parts)


def test_shuffle():
    got = shuffle([P([[1], [2, 3, 4]]), P([[1, 2], [3, 4]])])
    assert got.to_json() == [[1], [2, 4], [3, 5, 7], [6, 8]]
    Q = P([[1, 3], [2]])
    assert shuffle([Q]) == Q
    assert shuffle([SetPartition.singletons(range(1, 4))] * 2) == SetPartition.singletons(range(1, 7))


def test_nabla_examples():
    chain = [SetPartition.singletons(range(1, 5)), P([[1, 2], [3, 4]]), SetPartition.full(range(1, 5))]
    assert nabla(chain).to_json() == [[1, 5, 12], [2, 3, 4], [6, 7, 11], [8, 9, 10]]
    assert nabla([SetPartition.full(range(1, 5))] * 3) == SetPartition.full(range(1, 13))
    bottom = SetPartition.singletons(range(1, 4))
    for Q in noncrossing_partitions(3):
        assert all(len(b) == 2 for b in nabla([bottom, Q]).blocks)


@pytest.mark.parametrize("n,k,size", [(3, 2, 12), (4, 1, 14), (4, 2, 55), (3, 3, 22)])
def test_kdivisible_counts(n, k, size):
    C = enumerate_kdivisible(n, k)
    assert len(C) == size == A.fuss_catalan(f"A{n - 1}", k)
    assert C.rank_sizes() == [int(x) for x in A.narayana_vector(f"A{n - 1}", k)]


@pytest.mark.parametrize("n,k", [(2, 2), (3, 1), (2, 3), (3, 2)])
def test_type_b_counts(n, k):
    C = enumerate_kdivisible(n, k, typeB=True)
    assert len(C) == A.fuss_catalan(f"B{n}", k)
    assert C.rank_sizes() == [int(x) for x in A.narayana_vector(f"B{n}", k)]


def test_noncrossing_count_against_all_partitions():
    for m in range(1, 7):
        brute = [Q for Q in all_set_partitions(list(range(1, m + 1))) if is_noncrossing(Q)]
        assert set(brute) == set(noncrossing_partitions(m))


def test_rank_jump_examples():
    assert count_rank_jump(3, 2, 1, (1, 1)) == 6
    assert count_rank_jump(3, 2, 1, (2, 0)) == 1
    assert count_rank_jump(2, 2, 1, (2, 0), typeB=True) == 1
    with pytest.raises(PartitionError):
        count_rank_jump(3, 2, 1, (3, 1))


def test_rank_jumps_exhaustive():
    C = enumerate_kdivisible(3, 2)
    for jumps, v in exhaustive_rank_jumps(C, 2).items():
        assert count_rank_jump(3, 2, 2, jumps) == v


def test_type_count_examples():
    assert count_by_type((2, 1, 1), 4, 1, 1) == 6
    assert count_by_type((1, 1, 1), 3, 2, 2) == 22
    assert count_by_type((1, 1), 2, 2, 2, typeB=True) == 28


def test_type_b_type_count_is_exhaustive():
    C = enumerate_kdivisible(2, 2, typeB=True)
    counts = exhaustive_type_counts(C, 2)
    assert counts[(1, 1)] == 28


def test_signed_partitions():
    S = SignedSetPartition.of([[1, -1], [2, 3], [-2, -3]], 3)
    assert S.zero_block() is not None
    assert S.nz() == 1  # one antipodal pair of nonzero blocks


def test_mystery_poset():
    rep = mystery_report(3, 2)
    assert rep.size == 4 and rep.zeta_observed == rep.zeta_conjectured == [4, 7]
    assert len(mystery_poset(3, 1)) == 0
    assert len(mystery_poset(3, 3)) == 0


@pytest.mark.parametrize("n,k,typeB", [(3, 2, False), (4, 1, False), (2, 2, True), (3, 1, True)])
def test_algebraic_isomorphism(n, k, typeB):
    rep = algebraic_isomorphism(n, k, typeB)
    assert rep.ok


def test_refinement_order_matches_definition():
    C = enumerate_kdivisible(3, 2)
    for i, a in enumerate(C.elements):
        for j, b in enumerate(C.elements):
            assert C.poset.leq(i, j) == a.refines(b)


def test_block_count_histogram():
    C = enumerate_kdivisible(4, 1)
    assert Counter(len(Q) for Q in C.elements) == Counter({1: 1, 2: 6, 3: 6, 4: 1})
