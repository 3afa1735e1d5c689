"""Gamma-ratio bounds and the Student-length factor E_n.

``sqrt(x + 1/4) < Gamma(x + 1) / Gamma(x + 1/2) < sqrt(x + 1/2)`` for ``x > 0``,
and ``E_n = Gamma(n/2) / (Gamma((n-1)/2) sqrt(n (n-1)))``, the factor that
carries the expected sample standard deviation into the mean length of the
Student interval.
"""

import math
from dataclasses import dataclass

from . import specfun
from .errors import DomainError


def gamma_ratio(x):
    """Gamma(x + 1) / Gamma(x + 1/2) for ``x >= 0``."""
    x = float(x)
    if not (x >= 0.0 and math.isfinite(x)):
        raise DomainError("x must be finite and >= 0, got %r" % x)
    return math.exp(specfun.log_gamma_diff(x + 0.5, 0.5))


# ln Gamma(x + 1) - ln Gamma(x + 1/2) - ln(x)/2 = sum c_k x^-k over odd k
_RATIO_SERIES = ((1, 1.0 / 8.0), (3, -1.0 / 192.0), (5, 1.0 / 640.0),
                 (7, -17.0 / 14336.0), (9, 31.0 / 18432.0))
_SERIES_FROM = 40.0


def _log_margins(x):
    """``(ln R - ln sqrt(x + 1/4), ln sqrt(x + 1/2) - ln R)`` for ``R = gamma_ratio(x)``.

    Past ``_SERIES_FROM`` the asymptotic series is combined with
    ``log1p(t) - t`` so the O(1/x^2) lower gap keeps full relative precision.
    """
    if x < _SERIES_FROM:
        lr = specfun.log_gamma_diff(x + 0.5, 0.5)
        return lr - 0.5 * math.log(x + 0.25), 0.5 * math.log(x + 0.5) - lr
    tail = sum(c * x ** -k for k, c in _RATIO_SERIES[1:])
    lower = -0.5 * specfun._log1pmx(0.25 / x) + tail
    upper = 0.5 * specfun._log1pmx(0.5 / x) + 0.125 / x - tail
    return lower, upper


@dataclass(frozen=True)
class Lemma2Check:
    """Both sides of the sandwich at ``x``; margins are computed without cancellation."""

    x: float
    lower: float
    ratio: float
    upper: float
    lower_margin: float
    upper_margin: float

    @property
    def holds(self):
        return self.lower_margin > 0.0 and self.upper_margin > 0.0


def lemma2_check(x):
    """Evaluate both sides of the gamma-ratio sandwich at ``x``."""
    x = specfun.check_positive(x)
    lower, upper = math.sqrt(x + 0.25), math.sqrt(x + 0.5)
    ratio = gamma_ratio(x)
    dl, du = _log_margins(x)
    return Lemma2Check(x, lower, ratio, upper, lower * math.expm1(dl), ratio * math.expm1(du))


def _check_n(n):
    if isinstance(n, bool) or int(n) != n or n < 2:
        raise DomainError("n must be an integer >= 2, got %r" % (n,))
    return int(n)


def e_n(n):
    """E_n, computed as the gamma ratio at ``(n - 2)/2`` over ``sqrt(n (n - 1))``."""
    n = _check_n(n)
    return gamma_ratio(0.5 * (n - 2)) / math.sqrt(n * (n - 1.0))


@dataclass(frozen=True)
class EnBoundComparison:
    n: int
    lower_bound_En: float
    upper_bound_En1: float

    @property
    def separated(self):
        # squared bounds are (2n-3)/(4n(n-1)) and 1/(2(n+1)); compare them exactly
        n = self.n
        return (2 * n - 3) * (n + 1) > 2 * n * (n - 1)

    @property
    def margin(self):
        return self.lower_bound_En - self.upper_bound_En1


def e_n_bound_comparison(n):
    """Lower bound on E_n against upper bound on E_{n+1}, both from the sandwich.

    The bounds separate, and so prove ``E_n > E_{n+1}``, for every ``n >= 4``.
    """
    n = _check_n(n)
    lower = math.sqrt(0.5 * (n - 2) + 0.25) / math.sqrt(n * (n - 1.0))
    upper = math.sqrt(0.5 * (n - 1) + 0.5) / math.sqrt(n * (n + 1.0))
    return EnBoundComparison(n, lower, upper)
