import pytest

from fusscat import analytics as A
from fusscat.cluster import (
    ClusterError,
    build_cluster_complex,
    crossing_is_symmetric,
    crossing_is_tau_invariant,
    embedded_copy_ok,
    expected_tau_star_order,
    h_from_f,
    is_pure,
    tau_maps,
    tau_orbits_meet_negatives,
)
from fusscat.coxeter import build_group

SMALL = [("A1", 1), ("A1", 3), ("A2", 1), ("A2", 2), ("A3", 2), ("B2", 2), ("B3", 1), ("G2", 2),
         ("I2(5)", 2), ("H3", 1), ("D4", 1)]


def test_tau_on_a2():
    T = tau_maps("A2")
    # indices: a1, a2, a12, -a1, -a2
    assert {j: T.tau(j) for j in T.domain} == {0: 1, 1: 4, 2: 3, 3: 0, 4: 2}
    assert tau_orbits_meet_negatives(T)


def test_tau_involutions():
    for label in ["A3", "B3", "H3", "I2(7)"]:
        T = tau_maps(label)
        for t in (T.tau_l, T.tau_r):
            assert all(t[t[j]] == j for j in T.domain)


def test_a2_complex_is_pentagon():
    C = build_cluster_complex("A2", 1)
    assert [C.vertex_name(v) for v in range(5)] == ["-a1^1", "-a2^1", "a1^1", "a2^1", "a12^1"]
    assert C.f_vector == [1, 5, 5] and C.h_vector == [1, 3, 1]
    assert C.crosses(2, 3)
    assert not C.crosses(0, 1)


def test_negative_simples_never_cross():
    for label in ["A3", "B3", "H3"]:
        C = build_cluster_complex(label, 2)
        N = C.group.num_positive
        neg = [v for v, (j, _) in enumerate(C.vertices) if j >= N]
        assert C.is_face(neg)


def test_a1_has_k_plus_one_facets():
    for k in range(1, 6):
        assert len(build_cluster_complex("A1", k).facets) == k + 1


def test_a2_k2_vectors():
    C = build_cluster_complex("A2", 2)
    assert C.f_vector == [1, 8, 12] and C.h_vector == [1, 6, 5]
    assert build_cluster_complex("B2", 2).f_vector == [1, 10, 15]


@pytest.mark.parametrize("label,k", SMALL)
def test_counts_and_h_vector(label, k):
    C = build_cluster_complex(label, k)
    assert len(C.facets) == A.fuss_catalan(label, k)
    assert len(C.positive_facets()) == A.positive_fuss_catalan(label, k)
    assert C.h_vector == [int(x) for x in reversed(A.narayana_vector(label, k))]


@pytest.mark.parametrize("label,k", SMALL)
def test_structure(label, k):
    C = build_cluster_complex(label, k)
    assert is_pure(C)
    assert crossing_is_symmetric(C)
    assert crossing_is_tau_invariant(C)
    assert C.tau_star_order() == expected_tau_star_order(C.group, k)
    for color in range(1, k + 1):
        assert embedded_copy_ok(C, color)


def test_kirkman_cayley_matches_type_a():
    for n in range(1, 5):
        for k in range(1, 4):
            f = build_cluster_complex(f"A{n}", k).f_vector
            assert f == [A.kirkman_cayley(n + 1, k, i) for i in range(n + 1)]


def test_h_from_f():
    assert h_from_f([1, 5, 5]) == [1, 3, 1]
    assert h_from_f([1, 3]) == [1, 2]


def test_k_must_be_positive():
    with pytest.raises(ClusterError):
        build_cluster_complex("A2", 0)


def test_json_export():
    js = build_cluster_complex(build_group("A2"), 1).to_json()
    assert js["type"] == "A2" and len(js["facets"]) == 5 and js["h_vector"] == [1, 3, 1]
