import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from charvar.algebra import Matrix
from charvar.compactified import (
    LOWER_NILPOTENT,
    STANDARD_NILPOTENT,
    CompactifiedMatrix,
    Configuration,
    EigenvalueData,
    P1P1Point,
    closure_membership,
    is_generic,
    lift_sl2,
    matrix_to_p1p1,
    nilpotent_with_kernel,
    p1p1_to_matrix,
    star_product,
    trace_condition,
)
from charvar.sampling import random_sl2, sample_rng
from charvar.stability import s1_configuration
from charvar.suites import random_generic_eigen, realize_roles

E4 = EigenvalueData([2, 3, 5, 7])
E5 = EigenvalueData([2, 3, 5, 7, 11])
small = st.fractions(min_value=-6, max_value=6, max_denominator=5)


def test_eigenvalue_data():
    assert E4.k(1) == Fraction(5, 2) and E4.alpha_minus(2) == Fraction(1, 3)
    for bad in (0, 1, -1):
        with pytest.raises(ValueError):
            EigenvalueData([2, bad, 3])


def test_is_generic_examples():
    assert is_generic(EigenvalueData([2, 3, 5, 7]))
    assert not is_generic(EigenvalueData([2, 2, Fraction(1, 4)]))
    assert not is_generic(EigenvalueData([2, 2, Fraction(1, 4), 3, 3]))
    assert not is_generic(EigenvalueData([2, Fraction(1, 2), 3, 3]))


def test_closure_membership_examples():
    assert closure_membership(0, 1, 0, 0, 0, 7)
    a = Fraction(3)
    assert closure_membership(a, 0, 0, 1 / a, 1, a + 1 / a)
    assert not closure_membership(1, 0, 0, 1, 1, 3)
    with pytest.raises(ValueError):
        closure_membership(0, 0, 0, 0, 0, 2)


def test_projective_normalization():
    assert CompactifiedMatrix(0, 2, 0, 0, 0) == STANDARD_NILPOTENT
    assert CompactifiedMatrix(Fraction(1, 2), 0, 0, 2, -1).coords == (1, 0, 0, 4, -2)
    assert nilpotent_with_kernel(1, 0) == STANDARD_NILPOTENT
    assert nilpotent_with_kernel(0, 1) == LOWER_NILPOTENT


def test_p1p1_examples():
    e = EigenvalueData([2, 3, 5, 7])
    m = p1p1_to_matrix(P1P1Point(1, 1, 1, 1, 1), e)
    assert m == CompactifiedMatrix(Fraction(5, 3), 1, 1, Fraction(5, 3), Fraction(4, 3))
    assert p1p1_to_matrix(P1P1Point(1, 0, 1, 0, 1), e) == CompactifiedMatrix(Fraction(1, 2), 0, 0, 2, 1)
    assert p1p1_to_matrix(P1P1Point(1, 0, 0, 1, 1), e) == STANDARD_NILPOTENT
    p = matrix_to_p1p1(STANDARD_NILPOTENT.with_index(1), e)
    assert (p.S, p.T, p.U, p.V) == (1, 0, 0, 1)
    p = matrix_to_p1p1(CompactifiedMatrix(2, 0, 0, Fraction(1, 2), 1, 1), e)
    assert p1p1_to_matrix(p, e) == CompactifiedMatrix(2, 0, 0, Fraction(1, 2), 1)


@given(small, small, small, small, st.integers(1, 4))
def test_p1p1_round_trip(S, T, U, V, i):
    if not (S or T) or not (U or V):
        return
    p = P1P1Point(S, T, U, V, i)
    m = p1p1_to_matrix(p, E5)
    assert m.in_class(E5)
    assert matrix_to_p1p1(m, E5) == p


def test_p1p1_round_trip_bulk():
    for i in range(1000):
        rng = sample_rng(21, i)
        vals = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(4)]
        if not any(vals[:2]) or not any(vals[2:]):
            continue
        p = P1P1Point(*vals, index=1 + i % 4)
        assert matrix_to_p1p1(p1p1_to_matrix(p, E5), E5) == p


def test_matrix_to_p1p1_rejects_outside_points():
    with pytest.raises(ValueError, match="not in the compactified class"):
        matrix_to_p1p1(CompactifiedMatrix(1, 0, 0, 1, 1, 1), E4)


def test_star_product_examples():
    a = Fraction(3)
    diag = CompactifiedMatrix(a, 0, 0, 1 / a, 1)
    assert star_product(STANDARD_NILPOTENT, diag) == STANDARD_NILPOTENT
    ident = CompactifiedMatrix(1, 0, 0, 1, 1)
    m = CompactifiedMatrix(2, 3, 1, 2, 1)
    assert star_product(ident, m) == m
    up = CompactifiedMatrix(2, 5, 0, 3, 7)
    assert star_product(up, STANDARD_NILPOTENT) == STANDARD_NILPOTENT
    with pytest.raises(ValueError, match="undefined"):
        star_product(STANDARD_NILPOTENT, STANDARD_NILPOTENT)


@given(st.integers(0, 10 ** 6))
def test_star_product_associative(i):
    rng = sample_rng(5, i)
    ms = [lift_sl2(random_sl2(rng)) for _ in range(3)]
    ms[rng.randrange(3)] = nilpotent_with_kernel(rng.randint(-3, 3) or 1, rng.randint(-3, 3))
    try:
        left = star_product(star_product(ms[0], ms[1]), ms[2])
    except ValueError:
        return
    assert left == star_product(ms[0], star_product(ms[1], ms[2]))


def test_eigenlines():
    m = CompactifiedMatrix(2, 1, 0, Fraction(1, 2), 1)
    lines = m.eigenlines()
    assert (1, 0) in lines and len(lines) == 2
    assert STANDARD_NILPOTENT.eigenlines() == [(1, 0)]
    assert nilpotent_with_kernel(2, 3).eigenlines() == [(2, -3)]


def test_trace_condition_examples():
    assert trace_condition(s1_configuration(E5))
    rng = sample_rng(0, 1)
    cfg = realize_roles("GGG", E4, rng)
    assert trace_condition(cfg)
    # the normalized blocks divided by e are genuine SL2 matrices with product trace k_n
    prod = Matrix.identity(2)
    for m in cfg.mats:
        prod = prod @ m.block.scale(1 / m.e)
        assert (m.block.scale(1 / m.e)).det() == 1
    assert prod.trace() == E4.k(4)
    bumped = cfg.replace(1, p1p1_to_matrix(P1P1Point(1, 2, 3, 4, 1), E4))
    assert not trace_condition(bumped)


def test_configuration_json_round_trip():
    for i in range(20):
        rng = sample_rng(3, i)
        cfg = realize_roles("NGPG", random_generic_eigen(rng, 5), rng)
        if cfg is None:
            continue
        data = json.loads(json.dumps(cfg.to_json()))
        assert Configuration.from_json(data) == cfg


def test_configuration_json_errors():
    data = s1_configuration(E5).to_json()
    data["matrices"][2] = {"a": "1", "b": "0", "c": "0", "d": "1", "e": "1"}
    with pytest.raises(ValueError, match="matrix 3"):
        Configuration.from_json(data)
    data["matrices"][2] = {"a": "0", "b": "0", "c": "0", "d": "0", "e": "0"}
    with pytest.raises(ValueError, match="matrix 3"):
        Configuration.from_json(data)
    with pytest.raises(ValueError, match="need 4 matrices"):
        Configuration(E5, [STANDARD_NILPOTENT])
