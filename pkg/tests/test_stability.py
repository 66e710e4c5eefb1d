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
    p1p1_to_matrix,
)
from charvar.sampling import random_sl2, sample_rng
from charvar.stability import (
    CHART_WEIGHTS,
    STABLE,
    STRICTLY_SEMISTABLE,
    UNSTABLE,
    chart_generators,
    chart_point,
    classify_stability,
    hm_mu,
    hm_mu_segre,
    in_chart,
    nilpotent_grouping,
    observed_chart_weights,
    one_ps_limit,
    s1_configuration,
    s2_configuration,
    same_nilpotent_orbit,
    stability_oracle,
)
from charvar.suites import m1_two_family, random_configuration, random_generic_eigen, realize_roles, s1_orbit_sample

E4 = EigenvalueData([2, 3, 5, 7])
E5 = EigenvalueData([2, 3, 5, 7, 11])
seeds = st.integers(0, 10 ** 6)


def test_grouping_examples():
    g = nilpotent_grouping(realize_roles("GGGG", E5, sample_rng(0, 0)))
    assert (g.m1, g.m2) == (0, 0) and g.groups == ()
    g = nilpotent_grouping(s1_configuration(E5))
    assert g.groups == ((1, 2), (3, 4)) and g.j_sets == ((), ()) and (g.m1, g.m2) == (2, 0)


def test_m1_one_m2_two_is_unstable_for_n4():
    cfg = realize_roles("NPP", E4, sample_rng(0, 3), conjugate=False)
    r = classify_stability(cfg)
    assert (r.m1, r.m2, r.verdict) == (1, 2, UNSTABLE)
    assert stability_oracle(cfg).verdict == UNSTABLE


def test_verdict_examples():
    assert classify_stability(s1_configuration(E5)).verdict == STRICTLY_SEMISTABLE
    assert classify_stability(realize_roles("GGGG", E5, sample_rng(0, 1))).verdict == STABLE
    o = stability_oracle(s2_configuration(E5))
    assert o.witness_mu == 0 and o.verdict == STRICTLY_SEMISTABLE


def test_hm_mu_examples():
    cfg = realize_roles("GGGG", E5, sample_rng(0, 1), conjugate=False)
    if all(m.c for m in cfg.mats):
        assert hm_mu(cfg) == 4
    assert hm_mu(s1_configuration(E5)) == 0
    ups = [p1p1_to_matrix(P1P1Point(1, 0, u, 1, i), E4) for i, u in ((1, 1), (2, 2), (3, 3))]
    cfg = Configuration(E4, ups)
    assert hm_mu(cfg) == 0 and hm_mu_segre(cfg) == 0


@given(seeds)
def test_hm_mu_count_equals_max_form(i):
    cfg = random_configuration(sample_rng(31, i), ns=(4, 5))
    for r in (1, 2, 3):
        assert hm_mu(cfg, r) == hm_mu_segre(cfg, r)


@given(seeds)
def test_mu_count_decomposition(i):
    """#{c != 0} + #{upper triangular, e != 0} + #{standard nilpotent} = n - 1."""
    cfg = random_configuration(sample_rng(32, i), ns=(4, 5))
    c = sum(1 for m in cfg.mats if m.c)
    up = sum(1 for m in cfg.mats if not m.c and m.e)
    nil = sum(1 for m in cfg.mats if m == STANDARD_NILPOTENT)
    assert c + up + nil == cfg.n - 1


@given(seeds)
def test_verdict_independent_of_r(i):
    cfg = random_configuration(sample_rng(33, i), ns=(4, 5))
    verdicts = {stability_oracle(cfg, r).verdict for r in (1, 2, 3)}
    assert len(verdicts) == 1


@given(seeds)
def test_routes_agree_and_conjugation_invariance(i):
    rng = sample_rng(34, i)
    cfg = random_configuration(rng)
    a = classify_stability(cfg)
    assert stability_oracle(cfg).verdict == a.verdict
    g = random_sl2(rng)
    b = classify_stability(cfg.conjugate(g))
    assert (a.m1, a.m2, a.verdict) == (b.m1, b.m2, b.verdict)


def test_one_ps_limit_examples():
    diag = Configuration(E4, [CompactifiedMatrix(2, 0, 0, Fraction(1, 2), 1),
                              CompactifiedMatrix(3, 0, 0, Fraction(1, 3), 1),
                              CompactifiedMatrix(Fraction(1, 5), 0, 0, 5, 1)])
    assert one_ps_limit(diag) == diag
    cfg = realize_roles("GGGG", E5, sample_rng(0, 1))
    lim = one_ps_limit(cfg)
    assert all(m == LOWER_NILPOTENT for m in lim.mats if m.c)
    assert all(m == STANDARD_NILPOTENT for m in one_ps_limit(cfg, -1).mats if m.b)
    with pytest.raises(ValueError):
        one_ps_limit(cfg, 2)


@pytest.mark.parametrize("pair,target", [((1, 2), "s1"), ((2, 3), "s2"), ((3, 4), "s1")])
def test_limit_of_m1_two_family(pair, target):
    for i in range(10):
        cfg = m1_two_family(sample_rng(41, i), pair)
        assert classify_stability(cfg).verdict == STRICTLY_SEMISTABLE
        lim = one_ps_limit(cfg)
        ref = s1_configuration(cfg.eigen) if target == "s1" else s2_configuration(cfg.eigen)
        assert same_nilpotent_orbit(lim, ref)


def test_s1_and_s2_orbits_differ():
    assert not same_nilpotent_orbit(s1_configuration(E5), s2_configuration(E5))
    g = Matrix([[2, 1], [3, 2]])
    assert same_nilpotent_orbit(s2_configuration(E5).conjugate(g), s2_configuration(E5))


def test_chart_generators_on_s1():
    vals, w = chart_generators(chart_point(s1_configuration(E5), "U1"))
    assert vals == (0,) * 6 and w == (-2, -2, 2, 2, -2, 2)
    assert CHART_WEIGHTS["U2"] == (2, 2, -2, -2, 2, -2)
    assert not in_chart(s1_configuration(E5), "U2")
    with pytest.raises(ValueError, match="outside chart"):
        chart_point(s1_configuration(E5), "U2")


@given(seeds)
def test_chart_generators_vanish_on_orbit(i):
    cfg = s1_orbit_sample(sample_rng(51, i))
    for chart in ("U1", "U2"):
        vals, _ = chart_generators(chart_point(cfg, chart))
        assert not any(vals)


def _chart_generic(i):
    rng = sample_rng(52, i)
    while True:
        cfg = realize_roles("GGGG", random_generic_eigen(rng, 5), rng)
        if cfg and all(in_chart(cfg, c) for c in CHART_WEIGHTS):
            vals = [chart_generators(chart_point(cfg, c))[0] for c in CHART_WEIGHTS]
            if all(all(v) for v in vals):
                return cfg


@pytest.mark.parametrize("i", range(5))
def test_chart_weights_from_torus_action(i):
    cfg = _chart_generic(i)
    for chart, w in CHART_WEIGHTS.items():
        assert observed_chart_weights(cfg, chart, 3) == w
        assert any(chart_generators(chart_point(cfg, chart))[0])
