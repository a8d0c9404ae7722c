"""Adaptive Gauss-Kronrod integrator: exactness, budgets, edge cases."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conevol.quadrature import QuadratureResult, integrate_adaptive


def test_polynomial_exactness_through_degree_13():
    # the embedded 15-point rule integrates degree <= 13 exactly; adaptive
    # wrapping must not spoil that
    for degree in range(14):
        res = integrate_adaptive(lambda x, d=degree: x ** d, 0.0, 1.0, 1e-12)
        assert res.converged
        assert abs(res.value - 1.0 / (degree + 1)) <= 1e-14


def test_polynomial_exactness_on_wide_interval():
    # same property away from unit scale; tolerance must sit above the
    # 50*eps*|I| roundoff floor for `converged` to be claimable
    for degree in range(14):
        exact = 2.0 ** (degree + 1) / (degree + 1)
        res = integrate_adaptive(lambda x, d=degree: x ** d, 0.0, 2.0, 1e-9)
        assert res.converged
        assert abs(res.value - exact) <= 1e-13 * max(1.0, exact)


def test_sine_over_half_period():
    res = integrate_adaptive(np.sin, 0.0, math.pi, 1e-12)
    assert res.converged
    assert res.value == pytest.approx(2.0, abs=1e-13)


def test_first_kind_defining_integral_matches_agm():
    from conevol.elliptic import complete_K

    res = integrate_adaptive(
        lambda t: 1.0 / np.sqrt(1.0 - 0.25 * np.sin(t) ** 2),
        0.0, math.pi / 2, 1e-12)
    assert res.converged
    assert abs(res.value - complete_K(0.5)) <= 2e-12


def test_budget_exhaustion_reported_in_band():
    # sqrt has unbounded derivatives at 0; a 45-call budget cannot reach 1e-14
    res = integrate_adaptive(np.sqrt, 0.0, 1.0, 1e-14, budget=45)
    assert not res.converged
    assert res.evaluations <= 45
    assert res.error_estimate > 1e-14
    # the partial answer is still the best estimate so far
    assert res.value == pytest.approx(2.0 / 3.0, abs=1e-3)


def test_hard_integrand_converges_with_default_budget():
    res = integrate_adaptive(np.sqrt, 0.0, 1.0, 1e-12)
    assert res.converged
    assert res.value == pytest.approx(2.0 / 3.0, abs=1e-12)


def test_degenerate_interval():
    res = integrate_adaptive(np.exp, 3.0, 3.0, 1e-12)
    assert res == QuadratureResult(0.0, 0.0, 0, True)


def test_argument_validation():
    with pytest.raises(ValueError):
        integrate_adaptive(np.sin, 0.0, 1.0, 0.0)
    with pytest.raises(ValueError):
        integrate_adaptive(np.sin, 0.0, 1.0, -1e-10)
    with pytest.raises(ValueError):
        integrate_adaptive(np.sin, 1.0, 0.0, 1e-10)
    with pytest.raises(ValueError):
        integrate_adaptive(np.sin, 0.0, 1.0, 1e-10, budget=14)


def test_evaluation_count_accounting():
    res = integrate_adaptive(lambda x: np.exp(-x * x), 0.0, 4.0, 1e-13)
    assert res.converged
    assert res.evaluations >= 15
    assert res.evaluations % 15 == 0


def test_error_estimate_is_honest():
    # the reported estimate must bound the true error on a known integral
    res = integrate_adaptive(np.cos, 0.0, 1.5, 1e-11)
    assert abs(res.value - math.sin(1.5)) <= res.error_estimate


def test_tolerance_below_roundoff_floor_terminates_quickly():
    # absolute tolerances below ~50 eps * integral(|f|) are unreachable;
    # the integrator must give up fast instead of burning the budget
    res = integrate_adaptive(np.sin, 0.0, math.pi, 1e-18)
    assert not res.converged
    assert res.evaluations < 10_000
    assert res.value == pytest.approx(2.0, abs=1e-13)


@settings(max_examples=40, deadline=None)
@given(
    coeffs=st.lists(st.floats(-10, 10, allow_nan=False), min_size=4, max_size=4),
    bounds=st.tuples(st.floats(-5, 5, allow_nan=False),
                     st.floats(-5, 5, allow_nan=False)),
)
def test_cubic_polynomials_integrate_exactly(coeffs, bounds):
    a, b = sorted(bounds)
    c0, c1, c2, c3 = coeffs

    def poly(x):
        return c0 + x * (c1 + x * (c2 + x * c3))

    def antiderivative(x):
        return x * (c0 + x * (c1 / 2 + x * (c2 / 3 + x * c3 / 4)))

    exact = antiderivative(b) - antiderivative(a)
    res = integrate_adaptive(poly, a, b, 1e-10)
    assert abs(res.value - exact) <= 1e-8 * (1.0 + abs(exact))
