"""Tests for the adaptive quadrature, thermal sum, and root bracketing."""

import math

import numpy as np
import pytest

from casimir_stress.quadrature import (
    QuadratureError,
    SemiInfinite,
    Tolerance,
    UnitInterval,
    bracket_root,
    integrate_2d,
    integrate_semiinf,
    integrate_unit,
    matsubara_sum,
)


def test_exponential_on_half_line():
    res = integrate_semiinf(lambda x: np.exp(-x), decay_scale=1.0)
    assert res.converged
    assert abs(res.value - 1.0) <= 1e-12
    assert abs(res.value - 1.0) <= 10.0 * res.error_estimate + 1e-13


def test_bose_weighted_cubic_matches_closed_form():
    # integral of x**3 / (e**x - 1) over [0, inf) equals pi**4 / 15.
    # The integrand is written with expm1 so large x underflows cleanly
    # instead of overflowing.
    def f(x):
        return x**3 * np.exp(-x) / (-np.expm1(-x))

    res = integrate_semiinf(f, decay_scale=1.0, tol=Tolerance(rel_tol=1e-12))
    exact = math.pi**4 / 15.0
    assert res.converged
    assert abs(res.value - exact) <= 1e-10


def test_damped_quadratic_with_mismatched_scale():
    # integral of x**2 e**(-2x) = 1/4; the decay scale is deliberately
    # wrong by a factor of four to confirm the map only costs work.
    res = integrate_semiinf(lambda x: x**2 * np.exp(-2.0 * x), decay_scale=2.0)
    assert res.converged
    assert abs(res.value - 0.25) <= 1e-12


def test_unit_interval_with_cancellation():
    # integral of 3t**2 - 1 over [0, 1] vanishes identically.
    res = integrate_unit(lambda t: 3.0 * t**2 - 1.0)
    assert res.converged
    assert abs(res.value) <= 1e-13


def test_unit_interval_polynomial():
    res = integrate_unit(lambda t: t * (1.0 - t**2))
    assert res.converged
    assert abs(res.value - 0.25) <= 1e-13


def test_two_dimensional_product_exponential():
    res = integrate_2d(
        lambda x, y: np.exp(-x - y),
        outer=SemiInfinite(1.0),
        inner=SemiInfinite(1.0),
    )
    assert res.converged
    assert abs(res.value - 1.0) <= 1e-10
    assert abs(res.value - 1.0) <= 10.0 * res.error_estimate + 1e-12


def test_two_dimensional_mixed_domains():
    # integral over x in [0, inf), t in [0, 1] of e**(-x) * t**2 = 1/3.
    res = integrate_2d(
        lambda x, t: math.exp(-x) * t**2,
        outer=SemiInfinite(1.0),
        inner=UnitInterval(),
    )
    assert res.converged
    assert abs(res.value - 1.0 / 3.0) <= 1e-10


def test_scalar_only_integrand_is_accepted():
    # math.exp rejects arrays, forcing the scalar fallback path.
    res = integrate_unit(lambda t: math.exp(-t))
    assert res.converged
    assert abs(res.value - (1.0 - math.exp(-1.0))) <= 1e-12


def test_error_estimates_are_honest():
    cases = [
        (integrate_semiinf(lambda x: np.exp(-x) * np.cos(x), 1.0), 0.5),
        (integrate_semiinf(lambda x: x * np.exp(-x), 1.0), 1.0),
        (integrate_unit(lambda t: np.sqrt(np.maximum(t, 0.0)), None), 2.0 / 3.0),
    ]
    for res, exact in cases:
        assert abs(res.value - exact) <= 10.0 * res.error_estimate + 1e-12


def test_tightening_tolerance_does_not_hurt():
    def f(x):
        return np.exp(-x) * np.sin(3.0 * x)

    exact = 3.0 / 10.0
    loose = integrate_semiinf(f, 1.0, tol=Tolerance(rel_tol=1e-5))
    tight = integrate_semiinf(f, 1.0, tol=Tolerance(rel_tol=1e-11))
    assert abs(tight.value - exact) <= abs(loose.value - exact) + 1e-14
    assert abs(tight.value - exact) <= 1e-11
    assert tight.evaluations >= loose.evaluations


def test_results_are_deterministic():
    def f(x):
        return np.log1p(x) * np.exp(-1.7 * x)

    a = integrate_semiinf(f, 0.6, tol=Tolerance(rel_tol=1e-10))
    b = integrate_semiinf(f, 0.6, tol=Tolerance(rel_tol=1e-10))
    assert a.value == b.value
    assert a.error_estimate == b.error_estimate
    assert a.evaluations == b.evaluations


def test_non_finite_integrand_raises():
    def f(x):
        return np.where(x < 1.0, np.nan, np.exp(-x))

    with pytest.raises(QuadratureError):
        integrate_semiinf(f, 1.0)


def test_evaluation_budget_reports_non_convergence():
    tol = Tolerance(rel_tol=1e-14, abs_tol=1e-300, max_evaluations=200)
    res = integrate_semiinf(lambda x: np.exp(-x) * np.cos(10.0 * x), 1.0, tol=tol)
    assert not res.converged
    assert res.evaluations <= 200 + 15


def test_tolerance_validation():
    with pytest.raises(ValueError):
        Tolerance(rel_tol=0.0)
    with pytest.raises(ValueError):
        Tolerance(abs_tol=-1e-3)
    with pytest.raises(ValueError):
        Tolerance(max_evaluations=3)
    with pytest.raises(ValueError):
        SemiInfinite(0.0)
    with pytest.raises(ValueError):
        integrate_semiinf(lambda x: np.exp(-x), decay_scale=-1.0)
    tight = Tolerance(rel_tol=1e-6, abs_tol=1e-10).tightened(10.0)
    assert tight.rel_tol == 1e-6 / 10.0
    assert tight.abs_tol == 1e-10 / 10.0


def test_matsubara_sum_geometric_case():
    # g(z) = e**(-z) gives (1/beta) * (1/2 + e**(-2 pi / beta) / (1 - e**(-2 pi / beta))).
    res = matsubara_sum(lambda z: math.exp(-z), beta=1.0)
    q = math.exp(-2.0 * math.pi)
    exact = 0.5 + q / (1.0 - q)
    assert res.converged
    assert abs(res.value - exact) <= 1e-12
    assert abs(res.value - exact) <= 10.0 * res.error_estimate + 1e-15


def test_matsubara_sum_approaches_integral_at_large_beta():
    # For slowly spaced frequencies the weighted sum approximates
    # (1/(2 pi)) * integral of g, here 1/(2 pi).
    res = matsubara_sum(lambda z: math.exp(-z), beta=1e3)
    exact = 1.0 / (2.0 * math.pi)
    assert res.converged
    assert abs(res.value - exact) <= 2e-3 * exact


def test_matsubara_sum_validation():
    with pytest.raises(ValueError):
        matsubara_sum(lambda z: 0.0, beta=0.0)
    with pytest.raises(ValueError):
        matsubara_sum(lambda z: 0.0, beta=math.inf)


def test_bracket_root_finds_cosine_zero():
    root = bracket_root(math.cos, 1.0, 2.0, rel_tol=1e-12)
    assert root is not None
    assert abs(root - math.pi / 2.0) <= 1e-11


def test_bracket_root_returns_none_without_sign_change():
    assert bracket_root(lambda x: x**2 + 1.0, -1.0, 1.0) is None


def test_bracket_root_rejects_bad_input():
    with pytest.raises(ValueError):
        bracket_root(math.cos, 2.0, 1.0)
    with pytest.raises(QuadratureError):
        bracket_root(lambda x: math.nan, 0.0, 1.0)


def test_bracket_root_exact_endpoint_zero():
    assert bracket_root(lambda x: x, 0.0, 1.0) == 0.0
