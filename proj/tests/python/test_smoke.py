import math

import pytest

import hyperfun as hf


def test_gauss_matches_log_closed_form():
    x = 0.3
    assert hf.gauss_2f1(1.0, 1.0, 2.0, x) == pytest.approx(-math.log1p(-x) / x, rel=1e-12)


def test_complete_function_routes_agree():
    p = hf.HaParams(a=0.9, b=[0.4, 0.7], c=[1.1, 0.8])
    x = [0.15, -0.2]
    direct = hf.lauricella_fa(p, x)
    assert hf.fa_decomposed(p, x) == pytest.approx(direct, rel=1e-9)
    assert hf.fa_decomposed_transformed(p, x) == pytest.approx(direct, rel=1e-9)
    assert hf.fa_recursive(p, x) == pytest.approx(direct, rel=1e-9)


def test_confluent_function_matches_its_decomposition():
    p = hf.HaParams(a=0.8, b=[0.35], c=[0.9])
    pt = hf.EvalPoint(xi=[-0.25], eta=[0.3])
    assert hf.ha_decomposed(p, pt) == pytest.approx(hf.ha_eval(p, pt), rel=1e-9)


def test_wave_arguments_collapse_to_their_sum():
    p = hf.HaParams(a=0.7, b=[0.4], c=[1.2])
    split = hf.EvalPoint(xi=[0.2], eta=[0.1, 0.15])
    merged = hf.EvalPoint(xi=[0.2], eta=[0.25])
    assert hf.ha_eval(p, split) == pytest.approx(hf.ha_eval(p, merged), rel=1e-13)


def test_derivative_identity_against_finite_difference():
    p = hf.HaParams(a=0.9, b=[0.5], c=[1.3])
    pt = hf.EvalPoint(xi=[0.2], eta=[-0.1])
    h = 1e-6
    up = hf.ha_eval(p, hf.EvalPoint(xi=[0.2 + h], eta=[-0.1]))
    dn = hf.ha_eval(p, hf.EvalPoint(xi=[0.2 - h], eta=[-0.1]))
    exact = hf.ha_derivative(p, pt, [1], [0])
    assert exact == pytest.approx((up - dn) / (2 * h), rel=1e-7)


def test_scaled_solution_approaches_probe_limit():
    cfg = hf.SingularConfig(m=3, n=1, alpha=[0.25], lambda_sq=[1.0])
    samples = hf.singularity_probe(cfg, [0.4, 0.5, 0.6], [1.0, 0.5, -0.3], [1e-3], 0)
    assert samples[0].scaled == pytest.approx(hf.probe_limit(cfg), rel=0.02)


def test_solution_family_satisfies_the_system():
    p = hf.HaParams(a=1.1, b=[0.3, 0.45], c=[0.6, 0.9])
    pt = hf.EvalPoint(xi=[0.12, -0.2], eta=[0.25])
    for rep in hf.hypergeometric_system_residual(p, pt, 1):
        assert rep.relative() < 1e-9


def test_fundamental_solution_satisfies_the_equation():
    cfg = hf.SingularConfig(m=3, n=1, alpha=[0.25], lambda_sq=[1.0])
    x0 = [0.4, 0.5, 0.6]

    def u(x):
        return hf.fundamental_solution(cfg, hf.PointPair(x=list(x), x0=x0), 0)

    rep = hf.helmholtz_residual(cfg, u, [0.55, 0.62, 0.4], 1e-4)
    assert rep.relative() < 1e-5
    assert 1.7 < rep.order_estimate < 2.3


def test_domain_violation_raises():
    p = hf.HaParams(a=0.9, b=[0.4], c=[1.1])
    with pytest.raises(hf.DomainError):
        hf.lauricella_fa(p, [1.2])
    with pytest.raises(hf.ValidationError):
        hf.lauricella_fa(p, [0.1, 0.2])


def test_truncation_knobs_take_effect():
    p = hf.HaParams(a=0.9, b=[0.4], c=[1.1])
    t = hf.Truncation(rel_tol=1e-10)
    assert t.rel_tol == 1e-10
    t.max_total_order = 4
    with pytest.raises(hf.ConvergenceError):
        hf.lauricella_fa(p, [0.6], t)
