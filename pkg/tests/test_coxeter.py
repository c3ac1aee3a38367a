import pytest

from fusscat.coxeter import (
    CoxeterError,
    build_group,
    cycle_notation,
    element_from_type_a_permutation,
    expected_degrees,
    parse_cycles,
    parse_type,
    type_a_permutation,
)
from fusscat.polynomials import IntPolynomial


def a_elem(g, text):
    return element_from_type_a_permutation(g, parse_cycles(text, g.rank + 1))


def a_cycles(g, w):
    return cycle_notation(type_a_permutation(g, w))


@pytest.mark.parametrize("label,order,N,degrees", [
    ("A3", 24, 6, (2, 3, 4)),
    ("A1", 2, 1, (2,)),
    ("H3", 120, 15, (2, 6, 10)),
    ("B3", 48, 9, (2, 4, 6)),
    ("D4", 192, 12, (2, 4, 4, 6)),
    ("I2(7)", 14, 7, (2, 7)),
    ("G2", 12, 6, (2, 6)),
])
def test_build_group_invariants(label, order, N, degrees):
    g = build_group(label)
    assert g.order == order
    assert g.num_positive == N
    assert tuple(sorted(g.degrees)) == degrees


def test_family_rank_form_matches_label():
    assert build_group("A", 3) is build_group("A3")
    assert build_group("I2", 2, 5).name == "I2(5)"


@pytest.mark.parametrize("bad", ["X3", "E5", "I2(2)", "H5", "D2"])
def test_invalid_types_rejected(bad):
    with pytest.raises(CoxeterError):
        build_group(bad)


def test_parse_type():
    assert parse_type("i2(9)") == ("I2", 2, 9)
    assert parse_type("G2") == ("I2", 2, 6)
    assert parse_type("E8") == ("E", 8, None)


def test_degrees_table():
    assert expected_degrees("D", 5) == (2, 4, 5, 6, 8)
    assert expected_degrees("B", 3) == (2, 4, 6)


def test_symmetric_group_arithmetic():
    g = build_group("A2")
    s12, s23 = a_elem(g, "(1,2)"), a_elem(g, "(2,3)")
    c = g.multiply(s12, s23)
    assert a_cycles(g, c) == "(1,2,3)"
    assert a_cycles(g, g.invert(c)) == "(1,3,2)"
    assert g.multiply(c, g.invert(c)) == g.identity


def test_absolute_length_examples():
    g = build_group("A3")
    assert g.absolute_length(g.identity) == 0
    assert all(g.absolute_length(t) == 1 for t in g.reflections)
    assert g.absolute_length(a_elem(g, "(1,2)(3,4)")) == 2


def test_absolute_order_examples():
    g = build_group("A2")
    c = a_elem(g, "(1,2,3)")
    assert g.abs_leq(a_elem(g, "(1,2)"), c)
    assert not g.abs_leq(c, g.invert(c))
    assert all(g.abs_leq(g.identity, w) for w in g.elements())


def test_abs_leq_matches_length_additivity():
    g = build_group("B2")
    els = g.elements()
    for u in els:
        for v in els:
            additive = g.absolute_length(u) + g.absolute_length(g.multiply(g.invert(u), v)) == g.absolute_length(v)
            assert g.abs_leq(u, v) == additive


@pytest.mark.parametrize("label", ["A1", "A2", "A4", "B3", "D4", "H3", "F4", "I2(5)"])
def test_bipartite_coxeter_element(label):
    g = build_group(label)
    data = g.coxeter_element("bipartite")
    assert g.multiply(data.left, data.left) == g.identity
    assert g.multiply(data.right, data.right) == g.identity
    assert g.element_order(data.c) == g.coxeter_number
    assert g.absolute_length(data.c) == g.rank


def test_simple_reflections_negate_own_root():
    g = build_group("B3")
    N = g.num_positive
    for i, s in enumerate(g.generators):
        negated = [j for j in range(N) if not g.is_positive(s[j])]
        assert negated == [i]


def test_action_commutes_with_negation():
    g = build_group("H3")
    for w in g.generators:
        for j in range(2 * g.num_positive):
            assert w[g.negate_index(j)] == g.negate_index(w[j])


@pytest.mark.parametrize("label,p_t", [
    ("A1", [1, 1]),
    ("A2", [1, 3, 2]),
    ("B2", [1, 4, 3]),
])
def test_length_generating_polynomials(label, p_t):
    g = build_group(label)
    p_s, pt, formula_s, formula_t = g.length_generating_polynomials()
    assert pt == IntPolynomial(p_t)
    assert pt == formula_t
    assert p_s == formula_s


def test_a1_poincare_polynomials_agree():
    p_s, p_t, _, _ = build_group("A1").length_generating_polynomials()
    assert p_s == p_t == IntPolynomial([1, 1])


def test_parabolic_types():
    g = build_group("A3")
    assert g.parabolic_type(g.identity) == ()
    assert all(g.parabolic_type(t) == ("A1",) for t in g.reflections)
    assert g.parabolic_type(a_elem(g, "(1,2,3,4)")) == ("A3",)


def test_longest_element():
    assert build_group("B3").longest_element_is_minus_one()
    assert build_group("H3").longest_element_is_minus_one()
    assert not build_group("A2").longest_element_is_minus_one()
    assert not build_group("I2(5)").longest_element_is_minus_one()


def test_standard_length_of_longest_element():
    g = build_group("A3")
    assert max(g.standard_length(w) for w in g.elements()) == g.num_positive


def test_enumeration_cap():
    with pytest.raises(CoxeterError):
        build_group("E8").elements()
