import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from monoci.crossing import (OrderedGammaPair, alpha_star_gamma_scale,
                             alpha_star_normal_variance, cdf_crossing, density_crossings,
                             gamma_scale_crossing, gamma_scale_pair, normal_variance_crossing,
                             normal_variance_pair, R_TOL, D_TOL)
from monoci.dist import GammaSpec
from monoci.errors import DomainError, StructuralError

import oracles

# Gamma(1, 1) vs Gamma(2, 1/2): F1 - F2 = e^{-2x}(1 + 2x) - e^{-x}, zero where e^x = 1 + 2x
X_STAR_11 = oracles.exp_vs_erlang_root()
ALPHA_STAR_11 = -math.expm1(-X_STAR_11)
# density crossings solve log(2x) = x - log 2 ... i.e. e^{-x} = 4x e^{-2x}: e^x = 4x
C1_11 = oracles.bisect(lambda x: math.exp(x) - 4.0 * x, 0.01, 1.0)
C2_11 = oracles.bisect(lambda x: math.exp(x) - 4.0 * x, 1.5, 5.0)


def test_alpha_star_reference_case():
    rep = gamma_scale_crossing(1, 1.0)
    assert rep.x_star == pytest.approx(X_STAR_11, rel=1e-12)
    assert rep.alpha_star == pytest.approx(ALPHA_STAR_11, abs=1e-12)
    assert rep.alpha_star == pytest.approx(0.71533, abs=1e-5)
    assert alpha_star_gamma_scale(1, 1.0) == rep.alpha_star


def test_density_crossings_reference_case():
    c1, c2 = density_crossings(gamma_scale_pair(1, 1.0))
    assert c1 == pytest.approx(C1_11, rel=1e-12)
    assert c2 == pytest.approx(C2_11, rel=1e-12)
    assert c2 == pytest.approx(2.15329, abs=1e-5)


def test_report_invariants_small_shape():
    rep = gamma_scale_crossing(1, 0.5)
    assert 0.0 < rep.alpha_star < 1.0
    assert rep.c1 < rep.x_star < rep.c2
    assert rep.residual <= D_TOL
    assert rep.pair.cdf_difference(rep.c1) > 0.0 > rep.pair.cdf_difference(rep.c2)


def report_checks(rep):
    pair = rep.pair
    assert rep.c1 < rep.x_star < rep.c2
    for c in (rep.c1, rep.c2):
        assert abs(pair.log_ratio(c)) <= R_TOL * max(1.0, c)
    assert rep.residual <= D_TOL
    assert pair.first.cdf(rep.x_star) == pytest.approx(pair.second.cdf(rep.x_star), abs=1e-10)
    # sign pattern of F1 - F2 on both sides of the crossing
    # the crossing can sit in a far tail, so grid ends are clamped around x*
    lo = min(pair.first.quantile(1e-6), 0.5 * rep.x_star)
    hi = max(pair.second.quantile(1 - 1e-6), 2.0 * rep.x_star)
    # points where both tails underflow carry no sign information and are skipped
    for x in np.geomspace(lo, rep.x_star * (1 - 1e-4), 25):
        if pair.first.cdf(x) > 1e-300:
            assert pair.cdf_difference(x) > 0.0
    for x in np.geomspace(rep.x_star * (1 + 1e-4), hi, 25):
        if pair.first.sf(x) > 1e-300:
            assert pair.cdf_difference(x) < 0.0


@settings(max_examples=80, deadline=None)
@given(st.floats(min_value=0.05, max_value=200.0), st.floats(min_value=1.01, max_value=5.0),
       st.floats(min_value=0.1, max_value=10.0), st.floats(min_value=1.01, max_value=5.0))
def test_arbitrary_ordered_pair(a1, ratio_a, b1, ratio_b):
    pair = OrderedGammaPair(GammaSpec(a1, b1), GammaSpec(a1 * ratio_a, b1 / ratio_b))
    try:
        rep = cdf_crossing(pair)
    except StructuralError:
        # only allowed when a density crossing sits where both tails underflow
        c1, c2 = density_crossings(pair)
        left = pair.first.cdf(c1) < 1e-300 and pair.second.cdf(c1) < 1e-300
        right = pair.first.sf(c2) < 1e-300 and pair.second.sf(c2) < 1e-300
        assert left or right
        return
    report_checks(rep)


def test_tiny_lower_density_crossing():
    # c1 lies some forty decades below the ratio minimizer
    pair = OrderedGammaPair(GammaSpec(2.0, 1.0), GammaSpec(2.03125, 0.25))
    c1, c2 = density_crossings(pair)
    assert c1 < 1e-30
    assert abs(pair.log_ratio(c1)) <= R_TOL
    report_checks(cdf_crossing(pair))


def test_crossing_beyond_double_range_is_reported():
    # nearly equal scales push x* to where both survival functions underflow
    pair = OrderedGammaPair(GammaSpec(1.0, 1.0), GammaSpec(3.0, 1.0 / 1.015625))
    with pytest.raises(StructuralError):
        cdf_crossing(pair)


@settings(max_examples=25, deadline=None)
@given(st.floats(min_value=0.1, max_value=20.0), st.floats(min_value=1.05, max_value=3.0),
       st.floats(min_value=0.75, max_value=1.5))
def test_alpha_star_matches_scipy_scan(a1, ratio_a, e):
    # pairs near the normalized-sum case (e = 1), where x* stays in the body
    a2, b1, b2 = a1 * ratio_a, 1.0, ratio_a ** -e
    cells, ref = oracles.grid_scan_crossing(a1, b1, a2, b2, tail=1e-15, log=True)
    assert len(cells) == 1
    rep = cdf_crossing(OrderedGammaPair(GammaSpec(a1, b1), GammaSpec(a2, b2)))
    assert rep.alpha_star == pytest.approx(ref, abs=1e-9)


@pytest.mark.parametrize("n", [1, 2, 5, 20, 50])
@pytest.mark.parametrize("a", [0.5, 1.0, 2.0])
def test_gamma_scale_matches_scipy_scan(n, a):
    _, ref = oracles.grid_scan_crossing(*oracles.gamma_scale_pair(n, a))
    assert gamma_scale_crossing(n, a).alpha_star == pytest.approx(ref, abs=1e-9)


@pytest.mark.parametrize("n", [2, 3, 10, 50])
def test_normal_variance_matches_scipy_scan(n):
    _, ref = oracles.grid_scan_crossing(*oracles.normal_variance_pair(n))
    assert alpha_star_normal_variance(n) == pytest.approx(ref, abs=1e-9)


def test_normal_variance_is_half_shape_gamma_scale():
    # chi2_{n-1}/(n-1) is the mean-one gamma with shape (n-1)/2
    for n in (2, 3, 7, 30):
        assert alpha_star_normal_variance(n) == pytest.approx(
            alpha_star_gamma_scale(n - 1, 0.5), abs=1e-13)
    pair = normal_variance_pair(5)
    assert (pair.first.shape, pair.second.shape) == (2.0, 2.5)
    assert pair.first.scale == pytest.approx(0.5) and pair.second.scale == pytest.approx(0.4)


def test_alpha_star_falls_toward_one_half():
    # computed, not asserted by any source: F1(x*) decreases in n and stays above 1/2
    for a in (0.5, 1.0, 2.0):
        seq = [alpha_star_gamma_scale(n, a) for n in range(1, 51)]
        assert all(b < c for b, c in zip(seq[1:], seq))
        assert all(v > 0.5 for v in seq)
    nv = [alpha_star_normal_variance(n) for n in range(2, 51)]
    assert all(b < c for b, c in zip(nv[1:], nv))


def test_level_bound_increases():
    for a in (0.5, 1.0, 2.0):
        lb = [gamma_scale_crossing(n, a).level_bound for n in range(1, 51)]
        assert all(b > c for b, c in zip(lb[1:], lb))
        assert all(0.0 < v < 1.0 for v in lb)
    rep = gamma_scale_crossing(1, 1.0)
    assert rep.level_bound == pytest.approx(2.0 * (1.0 - ALPHA_STAR_11), abs=1e-12)


@pytest.mark.parametrize("a1, b1, a2, b2", [
    (2.0, 1.0, 1.0, 0.5),   # shapes in the wrong order
    (1.0, 0.5, 2.0, 1.0),   # scales in the wrong order
    (1.0, 1.0, 1.0, 0.5),   # equal shapes
])
def test_ordered_pair_validation(a1, b1, a2, b2):
    with pytest.raises(DomainError):
        OrderedGammaPair(GammaSpec(a1, b1), GammaSpec(a2, b2))


def test_n_validation():
    with pytest.raises(DomainError):
        gamma_scale_crossing(0, 1.0)
    with pytest.raises(DomainError):
        normal_variance_crossing(1)
    with pytest.raises(DomainError):
        gamma_scale_crossing(1.5, 1.0)
    with pytest.raises(DomainError):
        gamma_scale_crossing(2, -1.0)


def test_large_n_stays_accurate():
    for n in (200, 1000):
        rep = gamma_scale_crossing(n, 1.0)
        report_checks(rep)
        _, ref = oracles.grid_scan_crossing(*oracles.gamma_scale_pair(n, 1.0), points=40_000)
        assert rep.alpha_star == pytest.approx(ref, abs=1e-8)


def _reference_reports():
    for a in (0.5, 1.0, 2.0):
        for n in (1, 2, 5, 20, 50):
            yield gamma_scale_crossing(n, a)
    for n in (2, 3, 10, 50):
        yield normal_variance_crossing(n)


def test_sign_pattern_on_hundred_point_grids():
    for rep in _reference_reports():
        pair = rep.pair
        lo = min(pair.first.quantile(1e-6), pair.second.quantile(1e-6))
        hi = max(pair.first.quantile(1 - 1e-6), pair.second.quantile(1 - 1e-6))
        left = np.geomspace(min(lo, 0.5 * rep.x_star), rep.x_star * (1 - 1e-6), 100)
        right = np.geomspace(rep.x_star * (1 + 1e-6), hi, 100)
        assert all(pair.cdf_difference(x) > 0.0 for x in left)
        assert all(pair.cdf_difference(x) < 0.0 for x in right)


@pytest.mark.parametrize("rep", list(_reference_reports()),
                         ids=lambda r: "%g-%g" % (r.pair.first.shape, r.pair.second.shape))
def test_quantile_order_flips_at_alpha_star(rep):
    f, s = rep.pair.first, rep.pair.second
    for u in np.linspace(0.001, 0.999, 101):
        if abs(u - rep.alpha_star) < 1e-9:
            continue
        if u < rep.alpha_star:
            assert f.quantile(u) < s.quantile(u)
        else:
            assert f.quantile(u) > s.quantile(u)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 200), st.floats(0.05, 20.0), st.floats(1e-6, 1 - 1e-6))
def test_unit_scale_quantiles_increase_with_shape(n, a, p):
    from monoci.specfun import inv_reg_gamma_p
    assert inv_reg_gamma_p(n * a, p) < inv_reg_gamma_p((n + 1) * a, p)
