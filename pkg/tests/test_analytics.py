from fractions import Fraction

import pytest

from fusscat import analytics as A
from fusscat.polynomials import BivariatePolynomial, IntPolynomial, evaluate_at_root_of_unity
from fusscat.sieving import cyclic_sieving_check, overlap_statistic, sieving_clusters, sieving_nc
from fusscat.triangles import dual_f_conjecture, triangles
from fusscat.cluster import build_cluster_complex


def test_catalan_values():
    assert A.fuss_catalan("A3", 1) == 14
    assert A.fuss_catalan("A3", 0) == 1
    assert A.positive_fuss_catalan("A2", 2) == 7
    assert A.fuss_catalan("H4", 1) == 280
    assert A.fuss_catalan("E8", 1) == 25080


def test_catalan_type_a_formula():
    from math import comb

    for n in range(1, 7):
        for k in range(1, 4):
            assert A.fuss_catalan(f"A{n}", k) == comb((k + 1) * (n + 1), n + 1) // (k * (n + 1) + 1)


def test_dihedral_catalan():
    for m in range(3, 10):
        assert A.fuss_catalan(f"I2({m})", 1) == m + 2


def test_narayana_values():
    assert A.fuss_narayana("B2", 2, 1) == 8
    assert A.narayana_vector("D4", 1) == [1, 12, 24, 12, 1]
    for label in ["A4", "B3", "F4", "H3", "I2(7)"]:
        g = A.group_data(label)
        for k in (1, 2, 3):
            vec = A.narayana_vector(label, k)
            assert vec[g.rank - 1] == k * g.num_positive
            assert sum(vec) == A.fuss_catalan(label, k)


def test_narayana_in_k_is_polynomial():
    p = A.narayana_polynomial_in_k("B3", 1)
    for k in range(1, 5):
        assert p(k) == A.fuss_narayana("B3", k, 1)


def test_average_rank():
    assert A.average_rank("A2", 2) == Fraction(2, 3)


def test_q_catalan():
    q = A.q_fuss_catalan("A2", 1)
    assert q == IntPolynomial([1, 0, 1, 1, 1, 0, 1])
    assert evaluate_at_root_of_unity(q, 3, 1) == 2
    assert A.sieving_values(q, 3) == [5, 2, 2]
    rep = A.q_fuss_catalan_report("E6", 2)
    assert rep["integral"] and rep["nonnegative"] and rep["value_at_1"] == A.fuss_catalan("E6", 2)


def test_triangles_a2_k2():
    T = triangles("A2", 2)
    assert T.M.pretty(("x", "y")) == "5 - 12y + 6xy + 7y^2 - 6xy^2 + x^2y^2"
    assert T.F.pretty(("p", "q")) == "1 + 6p + 2q + 7p^2 + 4pq + q^2"
    assert T.H.pretty(("s", "t")) == "5 + 2t + 4st + s^2t^2"
    assert all(T.transforms().values())
    d = T.duals()
    assert d["M"].pretty(("x", "y")) == "1 - 6y + 6xy + 7y^2 - 12xy^2 + 5x^2y^2"
    assert d["F"].pretty(("p", "q")) == "5 + 12p + 4q + 7p^2 + 4pq + q^2"


def test_triangles_k1_self_dual():
    T = triangles("A3", 1)
    assert all(T.self_dual().values())


@pytest.mark.parametrize("label,k", [("A3", 2), ("B3", 1), ("G2", 3)])
def test_triangle_transforms(label, k):
    assert all(triangles(label, k).transforms().values())


def test_noncrystal_h():
    T = triangles("I2(5)", 1)
    assert T.H_from_M and T.H.pretty(("s", "t")) == "1 + 3t + 2st + s^2t^2"
    H3 = triangles("H3", 1)
    assert H3.H.pretty(("s", "t")) == "1 + 12t + 3st + 8t^2 + 4st^2 + 3s^2t^2 + s^3t^3"
    assert all(H3.H.coeff(a, b) >= 0 for a in range(4) for b in range(4))


@pytest.mark.parametrize("label,k", [("A2", 2), ("B2", 3), ("A3", 2)])
def test_dual_f(label, k):
    assert dual_f_conjecture(build_cluster_complex(label, k))["status"] == "PASS"


def test_sieving_examples():
    rep = sieving_nc("A2", 1)
    assert rep.fixed == [5, 2, 2] and rep.ok
    rep = sieving_clusters("B3", 1)
    assert rep.order == 8 and rep.fixed == [20, 0, 0, 0, 20, 0, 0, 0] and rep.ok


@pytest.mark.parametrize("which", ["nc", "clusters"])
@pytest.mark.parametrize("label,k", [("A3", 1), ("A3", 2), ("B3", 2), ("G2", 3), ("H3", 1), ("I2(5)", 2)])
def test_sieving(which, label, k):
    assert cyclic_sieving_check(which, label, k).ok


def test_overlap():
    assert overlap_statistic("A2", 2, 1, 1).expected == 2
    assert overlap_statistic("A3", 2, 1, 3).expected == A.fuss_catalan("A3", 1)
    assert overlap_statistic("A3", 2, 2, 0).expected == 1
    assert overlap_statistic("B3", 2, 2, 1).ok


def test_bivariate_arithmetic():
    x, y = BivariatePolynomial.var(0), BivariatePolynomial.var(1)
    p = (x + y) ** 2
    assert p.coeff(1, 1) == 2 and p(1, 2) == 9
    assert (p - x * x - y * y) == 2 * x * y
