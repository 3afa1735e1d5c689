"""Crossing points of two gamma laws.

For ``X1 ~ Gamma(a1, b1)`` and ``X2 ~ Gamma(a2, b2)`` with ``a1 < a2`` and
``b1 > b2`` the log density ratio

    r(x) = (a1 - a2) log x + x (1/b2 - 1/b1) + const

is strictly convex, so the densities cross exactly twice, at ``c1 < c2``.
The CDF difference ``F1 - F2`` is positive at ``c1`` and negative at ``c2``
and vanishes exactly once in between, at ``x_star``; ``alpha_star`` is the
common CDF value there.  Below ``alpha_star`` the order-``u`` quantile of X1
is the smaller one, above it the larger one.
"""

import math
from dataclasses import dataclass

from . import specfun
from ._roots import brent, expand_down, expand_up
from .dist import GammaSpec, chi_square_as_scaled_gamma
from .errors import ConvergenceError, DomainError, StructuralError

R_TOL = 1e-12
D_TOL = 1e-11


@dataclass(frozen=True)
class OrderedGammaPair:
    first: GammaSpec
    second: GammaSpec

    def __post_init__(self):
        f, s = self.first, self.second
        if not (f.shape < s.shape and f.scale > s.scale):
            raise DomainError(
                "ordered pair needs a1 < a2 and b1 > b2, got (%r, %r) vs (%r, %r)"
                % (f.shape, f.scale, s.shape, s.scale))

    def log_ratio(self, x):
        """log f1(x) - log f2(x)."""
        f, s = self.first, self.second
        const = (s.shape * math.log(s.scale) + specfun.log_gamma(s.shape)
                 - f.shape * math.log(f.scale) - specfun.log_gamma(f.shape))
        return ((f.shape - s.shape) * math.log(x)
                + x * (1.0 / s.scale - 1.0 / f.scale) + const)

    @property
    def ratio_minimizer(self):
        f, s = self.first, self.second
        return (s.shape - f.shape) / (1.0 / s.scale - 1.0 / f.scale)

    def cdf_difference(self, x):
        """F1(x) - F2(x), taken on whichever tail keeps relative precision."""
        f, s = self.first, self.second
        p1, q1 = specfun._gamma_pq(f.shape, x / f.scale)
        p2, q2 = specfun._gamma_pq(s.shape, x / s.scale)
        if p1 <= 0.5:
            return p1 - p2
        return q2 - q1


@dataclass(frozen=True)
class CrossingReport:
    pair: OrderedGammaPair
    c1: float
    c2: float
    x_star: float
    alpha_star: float
    residual: float

    @property
    def level_bound(self):
        """Largest two-sided level ``alpha`` with ``alpha/2 < alpha_star < 1 - alpha/2``.

        Both quantile reversals at orders ``alpha/2`` and ``1 - alpha/2`` hold
        exactly when ``alpha`` is below this bound.
        """
        return 2.0 * min(self.alpha_star, 1.0 - self.alpha_star)


def density_crossings(pair):
    """The two roots ``c1 < c2`` of the log density ratio."""
    r = pair.log_ratio
    xm = pair.ratio_minimizer
    rm = r(xm)
    if not rm < 0.0:
        raise StructuralError("log density ratio has no sign change (r(x_m) = %r)" % rm)
    try:
        lo, rlo = expand_down(r, xm, positive=True)
        hi, rhi = expand_up(r, xm, positive=True, max_doublings=1024)
    except ConvergenceError as exc:
        raise StructuralError("could not bracket the density crossings: %s" % exc) from exc
    # r is convex in log x as well, and the lower root can sit many decades below x_m
    def g(u):
        return r(math.exp(u))

    um = math.log(xm)
    c1 = math.exp(brent(g, math.log(lo), um, flo=rlo, fhi=rm))
    c2 = math.exp(brent(g, um, math.log(hi), flo=rm, fhi=rhi))
    for c in (c1, c2):
        if abs(r(c)) > R_TOL * max(1.0, abs(c)):
            raise ConvergenceError("density crossing residual too large at %r" % c)
    return c1, c2


def cdf_crossing(pair):
    """Locate the unique interior zero of F1 - F2 and report it."""
    c1, c2 = density_crossings(pair)
    diff = pair.cdf_difference
    d1, d2 = diff(c1), diff(c2)
    if not (d1 > 0.0 and d2 < 0.0):
        raise StructuralError(
            "CDF difference has the wrong signs at the density crossings: "
            "D(%r)=%r, D(%r)=%r" % (c1, d1, c2, d2))
    x_star = math.exp(brent(lambda u: diff(math.exp(u)), math.log(c1), math.log(c2),
                            flo=d1, fhi=d2))
    residual = abs(diff(x_star))
    if residual > D_TOL:
        raise ConvergenceError("CDF crossing residual %r exceeds %r" % (residual, D_TOL),
                               bracket=(c1, c2))
    alpha_star = pair.first.cdf(x_star)
    return CrossingReport(pair, c1, c2, x_star, alpha_star, residual)


def gamma_scale_pair(n, a):
    """Mean-one laws of the normalized sums for samples of size ``n`` and ``n + 1``."""
    n = _check_n(n, 1)
    a = specfun.check_positive(a, "a")
    return OrderedGammaPair(GammaSpec.mean_one(n * a), GammaSpec.mean_one((n + 1) * a))


def normal_variance_pair(n):
    """Laws of ``S_n^2 / sigma^2`` and ``S_{n+1}^2 / sigma^2``."""
    n = _check_n(n, 2)
    return OrderedGammaPair(chi_square_as_scaled_gamma(n - 1), chi_square_as_scaled_gamma(n))


def gamma_scale_crossing(n, a):
    return cdf_crossing(gamma_scale_pair(n, a))


def normal_variance_crossing(n):
    return cdf_crossing(normal_variance_pair(n))


def alpha_star_gamma_scale(n, a):
    """Critical level for the gamma-scale interval at sample sizes ``n`` vs ``n + 1``."""
    return gamma_scale_crossing(n, a).alpha_star


def alpha_star_normal_variance(n):
    """Critical level for the normal-variance interval at sample sizes ``n`` vs ``n + 1``."""
    return normal_variance_crossing(n).alpha_star


def _check_n(n, n_min):
    if isinstance(n, bool) or int(n) != n or n < n_min:
        raise DomainError("n must be an integer >= %d, got %r" % (n_min, n))
    return int(n)
