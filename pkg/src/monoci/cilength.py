"""Classical confidence intervals and their mean lengths as functions of n.

Families and the interval each constructor returns, at level ``1 - alpha``:

* gamma scale, from the sample mean:
  ``(n xbar / g_{na;1-a/2}, n xbar / g_{na;a/2})``;
* normal variance, from ``s^2``:
  ``((n-1) s^2 / chi2_{n-1;1-a/2}, (n-1) s^2 / chi2_{n-1;a/2})``;
* normal mean, from ``(xbar, s)``: ``xbar -/+ t_{n-1;1-a/2} s / sqrt(n)``;
* Pareto, from ``S_n = sum log x``: ``(1 + g_{n;a/2} / S_n, 1 + g_{n;1-a/2} / S_n)``;
* uniform scale, from the sample max: ``(M_n, M_n alpha^{-1/n})``.

``g_{k;p}`` is the order-``p`` quantile of Gamma(k, 1).  Interval
constructors accept numpy arrays for the statistic.
"""

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import specfun
from .bounds import e_n
from .crossing import gamma_scale_crossing, normal_variance_crossing
from .errors import DomainError
from .specfun import check_positive, check_probability

FAMILIES = ("gamma_scale", "normal_variance", "normal_mean", "pareto", "uniform_scale")


@lru_cache(maxsize=4096)
def gamma_q(shape, p):
    """Cached Gamma(shape, 1) quantile."""
    return specfun.inv_reg_gamma_p(shape, p)


@lru_cache(maxsize=4096)
def _t_q(d, p):
    return specfun.student_t_quantile(d, p)


def chi_square_quantile(d, p):
    return 2.0 * gamma_q(0.5 * d, p)


def _check_n(n, n_min=1):
    if isinstance(n, bool) or int(n) != n or n < n_min:
        raise DomainError("n must be an integer >= %d, got %r" % (n_min, n))
    return int(n)


def _check_theta_pareto(theta):
    theta = float(theta)
    if not (theta > 1.0 and math.isfinite(theta)):
        raise DomainError("Pareto theta must be > 1, got %r" % theta)
    return theta


# gamma scale

def gamma_scale_interval(mean_x, n, a, alpha):
    n = _check_n(n)
    a = check_positive(a, "a")
    alpha = check_probability(alpha, "alpha")
    k = n * a
    total = n * np.asarray(mean_x, dtype=float)
    lo = total / gamma_q(k, 1.0 - 0.5 * alpha)
    hi = total / gamma_q(k, 0.5 * alpha)
    return _maybe_scalar(lo), _maybe_scalar(hi)


def gamma_scale_mean_length(n, a, alpha, beta=1.0):
    alpha = check_probability(alpha, "alpha")
    return gamma_scale_mean_length_asymmetric(n, a, 0.5 * alpha, 0.5 * alpha, beta)


def gamma_scale_mean_length_asymmetric(n, a, alpha1, alpha2, beta=1.0):
    """Mean length of ``(n xbar / g_{na;1-alpha2}, n xbar / g_{na;alpha1})``."""
    n = _check_n(n)
    a = check_positive(a, "a")
    alpha1 = check_probability(alpha1, "alpha1")
    alpha2 = check_probability(alpha2, "alpha2")
    beta = check_positive(beta, "beta")
    if not alpha1 + alpha2 < 1.0:
        raise DomainError("alpha1 + alpha2 must be < 1")
    k = n * a
    return beta * k * (1.0 / gamma_q(k, alpha1) - 1.0 / gamma_q(k, 1.0 - alpha2))


def one_sided_lower_mean(n, a, alpha, beta=1.0):
    """Expected lower confidence bound ``E[n xbar / g_{na;1-alpha}]``."""
    n = _check_n(n)
    a = check_positive(a, "a")
    alpha = check_probability(alpha, "alpha")
    beta = check_positive(beta, "beta")
    return beta * n * a / gamma_q(n * a, 1.0 - alpha)


def one_sided_upper_mean(n, a, alpha, beta=1.0):
    """Expected upper confidence bound ``E[n xbar / g_{na;alpha}]``."""
    n = _check_n(n)
    a = check_positive(a, "a")
    alpha = check_probability(alpha, "alpha")
    beta = check_positive(beta, "beta")
    return beta * n * a / gamma_q(n * a, alpha)


def normalized_gamma_quantile(n, a, p):
    """Quantile of Gamma(na, 1/(na)), the law of the sample mean over beta."""
    return gamma_q(n * a, p) / (n * a)


# normal variance and mean

def normal_variance_interval(s_sq, n, alpha):
    n = _check_n(n, 2)
    alpha = check_probability(alpha, "alpha")
    d = n - 1
    ss = d * np.asarray(s_sq, dtype=float)
    lo = ss / chi_square_quantile(d, 1.0 - 0.5 * alpha)
    hi = ss / chi_square_quantile(d, 0.5 * alpha)
    return _maybe_scalar(lo), _maybe_scalar(hi)


def normal_variance_mean_length(n, alpha, sigma_sq=1.0):
    n = _check_n(n, 2)
    alpha = check_probability(alpha, "alpha")
    sigma_sq = check_positive(sigma_sq, "sigma_sq")
    d = n - 1
    return sigma_sq * d * (1.0 / chi_square_quantile(d, 0.5 * alpha)
                           - 1.0 / chi_square_quantile(d, 1.0 - 0.5 * alpha))


def normal_mean_interval(mean_x, s, n, alpha):
    n = _check_n(n, 2)
    alpha = check_probability(alpha, "alpha")
    half = _t_q(n - 1, 1.0 - 0.5 * alpha) * np.asarray(s, dtype=float) / math.sqrt(n)
    mean_x = np.asarray(mean_x, dtype=float)
    return _maybe_scalar(mean_x - half), _maybe_scalar(mean_x + half)


def normal_mean_mean_length(n, alpha, sigma=1.0):
    """``2 sqrt(2) sigma t_{n-1;1-alpha/2} E_n``."""
    n = _check_n(n, 2)
    alpha = check_probability(alpha, "alpha")
    sigma = check_positive(sigma, "sigma")
    return 2.0 * math.sqrt(2.0) * sigma * _t_q(n - 1, 1.0 - 0.5 * alpha) * e_n(n)


# Pareto and uniform

def pareto_interval(s_n, n, alpha):
    n = _check_n(n)
    alpha = check_probability(alpha, "alpha")
    s_n = np.asarray(s_n, dtype=float)
    lo = 1.0 + gamma_q(float(n), 0.5 * alpha) / s_n
    hi = 1.0 + gamma_q(float(n), 1.0 - 0.5 * alpha) / s_n
    return _maybe_scalar(lo), _maybe_scalar(hi)


def pareto_mean_length(n, alpha, theta):
    """``(theta - 1) (g_{n;1-a/2} - g_{n;a/2}) / (n - 1)``; infinite at ``n = 1``."""
    if n == 1:
        raise DomainError("Pareto mean length is infinite at n = 1 (E[1/S_1] diverges)")
    n = _check_n(n, 2)
    alpha = check_probability(alpha, "alpha")
    theta = _check_theta_pareto(theta)
    spread = gamma_q(float(n), 1.0 - 0.5 * alpha) - gamma_q(float(n), 0.5 * alpha)
    return (theta - 1.0) * spread / (n - 1)


def uniform_interval(m_n, n, alpha):
    n = _check_n(n)
    alpha = check_probability(alpha, "alpha")
    m_n = np.asarray(m_n, dtype=float)
    return _maybe_scalar(m_n), _maybe_scalar(m_n * alpha ** (-1.0 / n))


def uniform_mean_length(n, alpha, theta=1.0):
    """``n/(n+1) theta (alpha^{-1/n} - 1)``."""
    n = _check_n(n)
    alpha = check_probability(alpha, "alpha")
    theta = check_positive(theta, "theta")
    return n / (n + 1.0) * theta * (alpha ** (-1.0 / n) - 1.0)


def _maybe_scalar(v):
    return float(v) if np.ndim(v) == 0 else v


@dataclass(frozen=True)
class CiFamily:
    """One interval family together with the true parameter values.

    Use the named constructors.  ``shape`` is the known gamma shape; ``scale``
    is whichever parameter the mean length is linear in (beta, sigma^2,
    sigma, theta); ``mu`` only matters for simulation.
    """

    name: str
    scale: float = 1.0
    shape: float = None
    mu: float = 0.0

    def __post_init__(self):
        if self.name not in FAMILIES:
            raise DomainError("unknown family %r; expected one of %s" % (self.name, FAMILIES))
        if self.name == "pareto":
            _check_theta_pareto(self.scale)
        else:
            check_positive(self.scale, "scale")
        if self.name == "gamma_scale":
            check_positive(self.shape, "shape")

    @classmethod
    def gamma_scale(cls, a, beta=1.0):
        return cls("gamma_scale", scale=beta, shape=a)

    @classmethod
    def normal_variance(cls, sigma_sq=1.0, mu=0.0):
        return cls("normal_variance", scale=sigma_sq, mu=mu)

    @classmethod
    def normal_mean(cls, sigma=1.0, mu=0.0):
        return cls("normal_mean", scale=sigma, mu=mu)

    @classmethod
    def pareto(cls, theta=2.0):
        return cls("pareto", scale=theta)

    @classmethod
    def uniform_scale(cls, theta=1.0):
        return cls("uniform_scale", scale=theta)

    @property
    def n_min(self):
        """Smallest n with a finite mean length."""
        return {"gamma_scale": 1, "uniform_scale": 1}.get(self.name, 2)

    @property
    def has_alpha_star(self):
        return self.name in ("gamma_scale", "normal_variance")

    def mean_length(self, n, alpha):
        if self.name == "gamma_scale":
            return gamma_scale_mean_length(n, self.shape, alpha, self.scale)
        if self.name == "normal_variance":
            return normal_variance_mean_length(n, alpha, self.scale)
        if self.name == "normal_mean":
            return normal_mean_mean_length(n, alpha, self.scale)
        if self.name == "pareto":
            return pareto_mean_length(n, alpha, self.scale)
        return uniform_mean_length(n, alpha, self.scale)

    def crossing(self, n):
        """Crossing report comparing sample sizes ``n`` and ``n + 1``, or None."""
        if self.name == "gamma_scale":
            return gamma_scale_crossing(n, self.shape)
        if self.name == "normal_variance":
            return normal_variance_crossing(n)
        return None


@dataclass(frozen=True)
class LengthRecord:
    n: int
    length: float
    alpha_star: float = None
    below_alpha_star: bool = None


@dataclass(frozen=True)
class LengthCurve:
    family: CiFamily
    alpha: float
    records: list = field(default_factory=list)

    @property
    def monotone_decreasing(self):
        return all(b.length < a.length for a, b in zip(self.records, self.records[1:]))

    @property
    def ns(self):
        return [r.n for r in self.records]

    @property
    def lengths(self):
        return [r.length for r in self.records]


def monotonicity_scan(family, alpha, n_min, n_max):
    """Mean lengths for ``n_min..n_max``; gamma-type families carry alpha* per n.

    The alpha* attached to ``n`` compares sample sizes ``n`` and ``n + 1``.
    """
    alpha = check_probability(alpha, "alpha")
    n_min = _check_n(n_min, family.n_min)
    n_max = _check_n(n_max, n_min)
    records = []
    for n in range(n_min, n_max + 1):
        length = family.mean_length(n, alpha)
        if family.has_alpha_star:
            a_star = family.crossing(n).alpha_star
            records.append(LengthRecord(n, length, a_star, alpha < a_star))
        else:
            records.append(LengthRecord(n, length))
    return LengthCurve(family, alpha, records)
