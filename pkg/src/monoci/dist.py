"""Distribution models: gamma, chi-square, Student t, normal, uniform scale, Pareto.

Every model is an immutable value with ``cdf``, ``quantile`` and
``sample(rng, size=None)``.  Chi-square is carried entirely by the gamma
kernel through :func:`chi_square_as_scaled_gamma` and ``ChiSquare.as_gamma``.

Samplers draw only from ``rng.random`` (uniform doubles on [0, 1)), so any
generator exposing that method reproduces the same variates:

* uniform scale: ``theta * u``;
* Pareto: ``(1 - u) ** (-1 / (theta - 1))``;
* exponential (gamma with shape 1): ``-beta * log(1 - u)``;
* normal: Box-Muller cosine branch, consuming ``u1, u2`` per variate with the
  radius from ``u1``;
* gamma, shape ``a != 1``: Marsaglia-Tsang squeeze/rejection; proposals are
  drawn in rounds for all still-pending slots (one normal pair then one
  uniform per slot per round), and shapes below one are boosted through
  ``Gamma(a + 1) * u ** (1 / a)`` with the boosting uniforms drawn after the
  accepted Gamma(a + 1) variates.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import specfun
from .errors import DomainError
from .specfun import check_positive, check_probability


def _size_out(values, size):
    if size is None:
        return float(values[0])
    return values.reshape(size)


def _count(size):
    if size is None:
        return 1
    return int(np.prod(size))


def standard_normal(rng, count):
    """``count`` standard normals by Box-Muller from ``2 * count`` uniforms."""
    u = rng.random(2 * count)
    u1 = u[0::2]
    u2 = u[1::2]
    return np.sqrt(-2.0 * np.log1p(-u1)) * np.cos(2.0 * np.pi * u2)


def standard_gamma(rng, shape, count):
    """``count`` draws from Gamma(shape, 1)."""
    if shape == 1.0:
        return -np.log1p(-rng.random(count))
    boost = shape < 1.0
    a = shape + 1.0 if boost else shape
    d = a - 1.0 / 3.0
    c = 1.0 / math.sqrt(9.0 * d)
    out = np.empty(count)
    pending = np.arange(count)
    while pending.size:
        m = pending.size
        z = standard_normal(rng, m)
        u = rng.random(m)
        v = 1.0 + c * z
        ok = v > 0.0
        v3 = np.where(ok, v * v * v, 1.0)
        with np.errstate(divide="ignore", invalid="ignore"):
            # squeeze first, full log test otherwise
            accept = ok & ((u < 1.0 - 0.0331 * z ** 4)
                           | (np.log(u) < 0.5 * z * z + d * (1.0 - v3 + np.log(v3))))
        out[pending[accept]] = d * v3[accept]
        pending = pending[~accept]
    if boost:
        out *= rng.random(count) ** (1.0 / shape)
    return out


@dataclass(frozen=True)
class GammaSpec:
    """Gamma law with shape ``a`` and scale ``beta``; mean ``a * beta``."""

    shape: float
    scale: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "shape", check_positive(self.shape, "shape"))
        object.__setattr__(self, "scale", check_positive(self.scale, "scale"))

    @classmethod
    def mean_one(cls, shape):
        """Gamma(k, 1/k), the law of a mean of ``k`` unit exponentials when ``k`` is integral."""
        shape = check_positive(shape, "shape")
        return cls(shape, 1.0 / shape)

    @property
    def mean(self):
        return self.shape * self.scale

    def pdf(self, x):
        if x <= 0.0:
            return 0.0
        return specfun.gamma_density(self.shape, x / self.scale) / self.scale

    def logpdf(self, x):
        a, b = self.shape, self.scale
        return (a - 1.0) * math.log(x) - x / b - a * math.log(b) - specfun.log_gamma(a)

    def cdf(self, x):
        return gamma_cdf(self, x)

    def sf(self, x):
        if x < 0.0:
            raise DomainError("x must be >= 0, got %r" % x)
        return specfun.reg_gamma_q(self.shape, x / self.scale)

    def quantile(self, p):
        return gamma_quantile(self, p)

    def sample(self, rng, size=None):
        return _size_out(self.scale * standard_gamma(rng, self.shape, _count(size)), size)


def gamma_cdf(spec, x):
    """P(a, x / beta)."""
    x = float(x)
    if x < 0.0:
        raise DomainError("x must be >= 0, got %r" % x)
    return specfun.reg_gamma_p(spec.shape, x / spec.scale)


def gamma_quantile(spec, p):
    """beta * P^{-1}(a, p)."""
    return spec.scale * specfun.inv_reg_gamma_p(spec.shape, p)


def chi_square_as_scaled_gamma(d):
    """Law of ``X / d`` for ``X ~ chi^2_d``: Gamma(d/2, 2/d)."""
    d = _check_dof(d)
    return GammaSpec(0.5 * d, 2.0 / d)


def _check_dof(d):
    if isinstance(d, bool) or int(d) != d or d < 1:
        raise DomainError("degrees of freedom must be an integer >= 1, got %r" % (d,))
    return int(d)


@dataclass(frozen=True)
class ChiSquare:
    dof: int

    def __post_init__(self):
        object.__setattr__(self, "dof", _check_dof(self.dof))

    def as_gamma(self):
        """Gamma(d/2, 2), the law of X itself."""
        return GammaSpec(0.5 * self.dof, 2.0)

    def cdf(self, x):
        return self.as_gamma().cdf(x)

    def quantile(self, p):
        return self.as_gamma().quantile(p)

    def sample(self, rng, size=None):
        return self.as_gamma().sample(rng, size)


@dataclass(frozen=True)
class StudentT:
    dof: int

    def __post_init__(self):
        object.__setattr__(self, "dof", _check_dof(self.dof))

    def cdf(self, x):
        d = self.dof
        tail = 0.5 * specfun.reg_inc_beta(0.5 * d, 0.5, d / (d + x * x))
        return 1.0 - tail if x > 0 else tail

    def quantile(self, p):
        return specfun.student_t_quantile(self.dof, p)

    def sample(self, rng, size=None):
        n = _count(size)
        z = standard_normal(rng, n)
        w = 2.0 * standard_gamma(rng, 0.5 * self.dof, n) / self.dof
        return _size_out(z / np.sqrt(w), size)


@dataclass(frozen=True)
class Normal:
    mu: float = 0.0
    sigma: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "sigma", check_positive(self.sigma, "sigma"))

    @property
    def variance(self):
        return self.sigma * self.sigma

    def cdf(self, x):
        return specfun.normal_cdf((x - self.mu) / self.sigma)

    def quantile(self, p):
        return self.mu + self.sigma * specfun.normal_quantile(p)

    def sample(self, rng, size=None):
        return _size_out(self.mu + self.sigma * standard_normal(rng, _count(size)), size)


@dataclass(frozen=True)
class UniformScale:
    """U(0, theta)."""

    theta: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "theta", check_positive(self.theta, "theta"))

    def cdf(self, x):
        return min(max(x / self.theta, 0.0), 1.0)

    def quantile(self, p):
        return self.theta * check_probability(p)

    def sample(self, rng, size=None):
        return _size_out(self.theta * rng.random(_count(size)), size)


@dataclass(frozen=True)
class Pareto:
    """Density ``(theta - 1) / x**theta`` on ``x >= 1``."""

    theta: float = 2.0

    def __post_init__(self):
        theta = float(self.theta)
        if not (theta > 1.0 and math.isfinite(theta)):
            raise DomainError("Pareto theta must be > 1, got %r" % theta)
        object.__setattr__(self, "theta", theta)

    def cdf(self, x):
        if x <= 1.0:
            return 0.0
        return -math.expm1((1.0 - self.theta) * math.log(x))

    def quantile(self, p):
        return (1.0 - check_probability(p)) ** (-1.0 / (self.theta - 1.0))

    def sample(self, rng, size=None):
        u = rng.random(_count(size))
        return _size_out((1.0 - u) ** (-1.0 / (self.theta - 1.0)), size)

    def sample_log_sum(self, rng, n, size=None):
        """Draws of the sufficient statistic ``S_n = sum(log X_i)``.

        Consumes the same uniforms as ``sample(rng, (size, n))`` and returns
        the row sums of their logs, i.e. ``S_n ~ Gamma(n, 1/(theta - 1))``.
        """
        m = _count(size)
        u = rng.random(m * n).reshape(m, n)
        s = (-np.log1p(-u)).sum(axis=1) / (self.theta - 1.0)
        return _size_out(s, size)


def sample(model, rng, size=None):
    """One variate (``size=None``) or an array of variates from ``model``."""
    return model.sample(rng, size)
