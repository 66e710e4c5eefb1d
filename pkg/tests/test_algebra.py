from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from charvar.algebra import (
    Matrix,
    Polynomial,
    as_rational,
    minors_gcd,
    poly_equal,
    poly_eval,
    rational_from_str,
    rational_to_str,
    smith_normal_form,
    smith_normal_form_with_transforms,
    solve_linear,
    variables,
)

x, y, z = variables("x y z")

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def polys(draw, names=("x", "y", "z"), max_terms=4):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        exps = tuple(draw(st.integers(0, 2)) for _ in names)
        terms[exps] = draw(rationals)
    return Polynomial(names, terms)


def test_rational_serialization():
    assert rational_to_str(Fraction(3, 6)) == "1/2"
    assert rational_to_str(4) == "4"
    assert rational_from_str(" -7/21 ") == Fraction(-1, 3)
    with pytest.raises(TypeError):
        as_rational(True)


def test_poly_eval_examples():
    assert poly_eval(x ** 2 + y, {"x": 2, "y": 3}) == 7
    assert poly_eval(Polynomial.const(5), {}) == 5
    assert poly_eval(x - x, {"x": Fraction(1, 3)}) == 0


def test_poly_eval_missing_variable():
    with pytest.raises(KeyError, match="y"):
        poly_eval(x * y, {"x": 1})


def test_poly_equal_examples():
    assert poly_equal((x + y) ** 2, x * x + 2 * x * y + y * y)
    assert poly_equal(x * y, y * x)
    assert not poly_equal(x, x + 1)


def test_variables_are_sorted_and_unique():
    p = Polynomial(("y", "x"), {(1, 0): 1})
    assert p.variables == ("x", "y") and poly_equal(p, y)
    with pytest.raises(ValueError):
        Polynomial(("x", "x"), {})


def test_display_and_parts():
    p = x ** 3 - x * y * z + 2 * y - Fraction(1, 2)
    assert p.degree() == 3
    assert poly_equal(p.homogeneous_part(3), x ** 3 - x * y * z)
    assert p.coefficient({"y": 1}) == 2
    assert "x^3" in str(p)


@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert poly_equal(p + q, q + p)
    assert poly_equal(p * q, q * p)
    assert poly_equal((p + q) + r, p + (q + r))
    assert poly_equal((p * q) * r, p * (q * r))
    assert poly_equal(p * (q + r), p * q + p * r)
    assert (p - p).is_zero()


@given(polys(), polys(), rationals, rationals, rationals)
def test_evaluation_is_a_ring_map(p, q, a, b, c):
    pt = {"x": a, "y": b, "z": c}
    assert poly_eval(p * q, pt) == poly_eval(p, pt) * poly_eval(q, pt)
    assert poly_eval(p + q, pt) == poly_eval(p, pt) + poly_eval(q, pt)


@given(polys(), rationals)
def test_subs_matches_eval(p, a):
    assert poly_eval(p.subs({"x": a}), {"y": 1, "z": 2}) == poly_eval(p, {"x": a, "y": 1, "z": 2})


def test_matrix_basics():
    m = Matrix([[2, 1], [1, 1]])
    assert m.det() == 1
    assert m @ m.inverse() == Matrix.identity(2)
    assert m.trace() == 3
    assert (m ** 2).trace() == 7
    with pytest.raises(ZeroDivisionError):
        Matrix([[1, 2], [2, 4]]).inverse()


def test_polynomial_matrix_det():
    a, b, c, d = variables("a b c d")
    assert poly_equal(Matrix([[a, b], [c, d]]).det(), a * d - b * c)


# --- Smith normal form -----------------------------------------------------


def test_snf_examples():
    assert smith_normal_form([[2, 0], [0, 3]]) == ([1, 6], 2)
    assert smith_normal_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == ([1, 1, 1], 3)
    assert smith_normal_form([[0, 0], [0, 0]]) == ([], 0)


def _mul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def _det(m):
    return Matrix(m).det() if m else 1


int_matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)))


@given(int_matrices)
def test_snf_transforms_and_divisibility(m):
    u, d, v = smith_normal_form_with_transforms(m)
    assert _mul(_mul(u, m), v) == d
    assert abs(_det(u)) == 1 and abs(_det(v)) == 1
    diag = [d[i][i] for i in range(min(len(d), len(d[0])))]
    assert all(d[i][j] == 0 for i in range(len(d)) for j in range(len(d[0])) if i != j)
    nz = [x for x in diag if x]
    assert diag[:len(nz)] == nz and all(x > 0 for x in nz)
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))


@given(int_matrices)
def test_snf_matches_minor_gcds(m):
    diag, rank = smith_normal_form(m)
    prod = 1
    for k in range(1, min(len(m), len(m[0])) + 1):
        g = minors_gcd(m, k)
        if k <= rank:
            prod *= diag[k - 1]
            assert g == prod
        else:
            assert g == 0


def test_solve_linear():
    sol, rank = solve_linear([[1, 1], [1, -1], [2, 0]], [3, 1, 4])
    assert sol == [2, 1] and rank == 2
    assert solve_linear([[1, 1], [1, 1]], [1, 2])[0] is None
    assert solve_linear([[1, 1], [2, 2]], [1, 2])[0] is None
