import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from monoci.errors import AttainableRangeError, DomainError
from monoci.mc import simulate_nef
from monoci.nef import (GENERATORS, NefModel, delta_quantile, exponential, gaussian,
                        invert_delta, mean_length_scan, nef_interval)
from monoci.specfun import normal_quantile

from scipy import stats

import oracles

Z975 = 1.959963984540054


def gamma_quantile(n, p):
    return float(stats.gamma.ppf(p, n))


def test_delta_closed_forms():
    assert delta_quantile(gaussian(), 4, 0.975, 1.0) == pytest.approx(4.0 + 2.0 * Z975, rel=1e-14)
    # Gamma(1) quantile at 0.95 is -log(0.05)
    assert delta_quantile(exponential(), 1, 0.95, 0.5) == pytest.approx(
        -math.log(0.05) / 0.5, rel=1e-13)


def test_delta_monotone_in_theta():
    for model in (gaussian(), exponential()):
        thetas = np.linspace(-3.0, 0.95, 40)
        vals = [delta_quantile(model, 3, 0.3, th) for th in thetas]
        assert all(b > a for a, b in zip(vals, vals[1:]))


def test_delta_domain():
    with pytest.raises(DomainError):
        delta_quantile(exponential(), 2, 0.5, 1.0)
    with pytest.raises(DomainError):
        delta_quantile(gaussian(), 0, 0.5, 0.0)
    with pytest.raises(DomainError):
        delta_quantile(gaussian(), 2, 1.0, 0.0)


def test_inverse_examples():
    assert invert_delta(exponential(), 1, 0.95, 2.0) == pytest.approx(
        1.0 + math.log(0.05) / 2.0, abs=1e-14)
    assert invert_delta(exponential(), 1, 0.95, 2.0) == pytest.approx(-0.497866, abs=1e-6)
    assert invert_delta(gaussian(), 4, 0.975, 0.0) == pytest.approx(-0.5 * Z975, rel=1e-14)
    assert invert_delta(gaussian(), 4, 0.975, 0.0) == pytest.approx(-0.979982, abs=1e-6)


def test_interval_example():
    lo, hi = nef_interval(exponential(), 1, 0.1, 2.0)
    assert lo == pytest.approx(1.0 + math.log(0.05) / 2.0, abs=1e-14)
    assert hi == pytest.approx(1.0 + math.log(0.95) / 2.0, abs=1e-14)
    assert (lo, hi) == (pytest.approx(-0.497866, abs=1e-6), pytest.approx(0.974353, abs=1e-6))


@pytest.mark.parametrize("name", sorted(GENERATORS))
def test_numeric_inverse_matches_closed_form(name):
    model = GENERATORS[name]()
    for n in (1, 2, 5, 20):
        for alpha in (0.01, 0.3, 0.9):
            for t in (0.05, 1.0, 7.5, 60.0) if name == "exponential" else (-40.0, -1.0, 0.0, 3.0):
                closed = invert_delta(model, n, alpha, t)
                numeric = invert_delta(model, n, alpha, t, closed_form=False)
                assert numeric == pytest.approx(closed, abs=1e-9)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 50), st.floats(1e-4, 1 - 1e-4), st.floats(1e-3, 1e3))
def test_exponential_roundtrip(n, alpha, t):
    model = exponential()
    theta = invert_delta(model, n, alpha, t, closed_form=False)
    assert delta_quantile(model, n, alpha, theta) == pytest.approx(t, abs=1e-10 * max(1.0, t))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 50), st.floats(1e-4, 1 - 1e-4), st.floats(-1e3, 1e3))
def test_gaussian_roundtrip(n, alpha, t):
    model = gaussian()
    theta = invert_delta(model, n, alpha, t, closed_form=False)
    assert abs(delta_quantile(model, n, alpha, theta) - t) <= 1e-10 * max(1.0, abs(t))


@given(st.integers(1, 200), st.floats(1e-3, 0.999), st.floats(-1e3, 1e3))
def test_gaussian_length_constant(n, alpha, t):
    lo, hi = nef_interval(gaussian(), n, alpha, t)
    assert lo < hi
    assert hi - lo == pytest.approx(2.0 * normal_quantile(1.0 - 0.5 * alpha) / math.sqrt(n),
                                    abs=1e-10)


@given(st.integers(1, 100), st.floats(1e-3, 0.999), st.floats(1e-2, 1e3))
def test_exponential_interval_matches_gamma_quantiles(n, alpha, t):
    lo, hi = nef_interval(exponential(), n, alpha, t)
    assert lo < hi
    assert lo == pytest.approx(1.0 - gamma_quantile(n, 1.0 - 0.5 * alpha) / t, abs=1e-9)
    assert hi == pytest.approx(1.0 - gamma_quantile(n, 0.5 * alpha) / t, abs=1e-9)


def test_unattainable_value_reports_range():
    # delta of the exponential model is positive for every theta < 1
    with pytest.raises(AttainableRangeError) as info:
        invert_delta(exponential(), 3, 0.5, -1.0, closed_form=False)
    lo, hi = info.value.attainable
    assert lo >= 0.0 and hi > lo
    with pytest.raises(AttainableRangeError):
        invert_delta(exponential(), 3, 0.5, -1.0)


def test_decreasing_custom_model_swaps_endpoints():
    # X ~ N(-theta, 1): delta decreases in theta
    model = NefModel(
        name="custom", psi=lambda th: 0.5 * th * th, domain=(-math.inf, math.inf),
        delta=lambda n, a, th: -n * th + math.sqrt(n) * normal_quantile(a),
        sampler=None, increasing=False)
    lo, hi = nef_interval(model, 4, 0.05, 2.0)
    assert lo < hi
    assert (lo, hi) == (pytest.approx(-0.5 - 0.5 * Z975, abs=1e-9),
                        pytest.approx(-0.5 + 0.5 * Z975, abs=1e-9))


def test_gaussian_scan_is_closed_form():
    curve = mean_length_scan(gaussian(), 0.0, 0.05, 1, 10, 2000, seed=1)
    for r in curve.records:
        assert r.closed_form == pytest.approx(2.0 * Z975 / math.sqrt(r.n), rel=1e-14)
        # every simulated interval has the same length
        assert r.mean_length == pytest.approx(r.closed_form, rel=1e-12)
    assert curve.closed_form_decreasing


def test_exponential_scan_closed_form_decreasing():
    model = exponential()
    closed = [model.closed_length(n, 0.1, 0.0) for n in range(2, 51)]
    assert all(b < a for a, b in zip(closed, closed[1:]))
    # closed form oracle: (gamma_{n;0.95} - gamma_{n;0.05}) / (n - 1)
    for n in (2, 10, 50):
        ref = (gamma_quantile(n, 0.95) - gamma_quantile(n, 0.05)) / (n - 1)
        assert model.closed_length(n, 0.1, 0.0) == pytest.approx(ref, rel=1e-10)


def test_exponential_scan_matches_closed_form():
    curve = mean_length_scan(exponential(), 0.25, 0.1, 2, 12, 50_000, seed=2)
    assert curve.closed_form_decreasing
    for r in curve.records:
        assert abs(r.mean_length - r.closed_form) <= 4.0 * r.se


def test_scan_without_closed_form():
    curve = mean_length_scan(exponential(), 0.0, 0.1, 1, 3, 1000, seed=3)
    assert curve.records[0].closed_form is None
    assert curve.closed_form_decreasing is None


def test_exponential_coverage_example():
    rep = simulate_nef(exponential(), 0.5, 5, 0.1, 100_000, seed=4)
    assert abs(rep.coverage_z(0.9)) <= 4.0


def test_nef_simulation_deterministic():
    a = simulate_nef(exponential(), 0.5, 5, 0.1, 25_000, seed=5)
    assert simulate_nef(exponential(), 0.5, 5, 0.1, 25_000, seed=5, workers=3) == a


def test_scan_validation():
    with pytest.raises(DomainError):
        mean_length_scan(exponential(), 1.5, 0.1, 2, 5, 100)
    with pytest.raises(DomainError):
        mean_length_scan(gaussian(), 0.0, 0.1, 5, 2, 100)
