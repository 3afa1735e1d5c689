"""Quantile-inversion intervals for continuous natural exponential families.

A model supplies ``delta(n, alpha, theta)``, the order-``alpha`` quantile of
``T_n = X_1 + ... + X_n`` under ``theta``, which is strictly monotone in
``theta``.  The level ``1 - alpha`` interval for an observed ``t`` is

    (delta^{-1}_{n;1-alpha/2}(t), delta^{-1}_{n;alpha/2}(t))

when delta increases in theta, with the endpoints swapped otherwise.  Two
generators ship with closed forms: the standard normal (``psi = theta^2/2``)
and the standard exponential (``psi = -log(1 - theta)``, ``theta < 1``).
Whether the mean length falls with ``n`` for every generator is an open
question; :func:`mean_length_scan` only collects evidence.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import mc, specfun
from ._roots import brent
from .cilength import gamma_q
from .dist import standard_gamma, standard_normal
from .errors import AttainableRangeError, DomainError
from .specfun import check_probability

INVERT_RTOL = 1e-10


@dataclass(frozen=True)
class NefModel:
    """A continuous NEF generator.

    ``inverse(n, alpha, t)`` and ``closed_length(n, alpha, theta)`` are
    optional; ``inverse`` must accept numpy arrays for ``t``.
    """

    name: str
    psi: object
    domain: tuple
    delta: object
    sampler: object
    increasing: bool = True
    theta0: float = 0.0
    inverse: object = None
    closed_length: object = None
    min_finite_n: int = 1

    def check_theta(self, theta):
        lo, hi = self.domain
        theta = float(theta)
        if not lo < theta < hi:
            raise DomainError("theta=%r outside the parameter domain (%r, %r)" % (theta, lo, hi))
        return theta

    def sample(self, theta, rng, size):
        return self.sampler(self.check_theta(theta), rng, size)

    def mean_length_finite(self, n):
        return n >= self.min_finite_n

    def interval_many(self, n, alpha, t):
        """Vectorized :func:`nef_interval` over an array of observed sums."""
        t = np.asarray(t, dtype=float)
        if self.inverse is not None:
            a = self.inverse(n, 1.0 - 0.5 * alpha, t)
            b = self.inverse(n, 0.5 * alpha, t)
        else:
            a = np.array([invert_delta(self, n, 1.0 - 0.5 * alpha, v) for v in t.ravel()])
            b = np.array([invert_delta(self, n, 0.5 * alpha, v) for v in t.ravel()])
            a, b = a.reshape(t.shape), b.reshape(t.shape)
        return (a, b) if self.increasing else (b, a)


def _gaussian_delta(n, alpha, theta):
    return n * theta + math.sqrt(n) * specfun.normal_quantile(alpha)


def _gaussian_inverse(n, alpha, t):
    return (t - math.sqrt(n) * specfun.normal_quantile(alpha)) / n


def _gaussian_sampler(theta, rng, size):
    count = int(np.prod(size))
    return (theta + standard_normal(rng, count)).reshape(size)


def _gaussian_length(n, alpha, theta):
    return 2.0 * specfun.normal_quantile(1.0 - 0.5 * alpha) / math.sqrt(n)


def gaussian():
    """Standard normal generator: ``X ~ N(theta, 1)``, ``T_n ~ N(n theta, n)``."""
    return NefModel(
        name="gaussian",
        psi=lambda theta: 0.5 * theta * theta,
        domain=(-math.inf, math.inf),
        delta=_gaussian_delta,
        sampler=_gaussian_sampler,
        increasing=True,
        theta0=0.0,
        inverse=_gaussian_inverse,
        closed_length=_gaussian_length,
    )


def _exponential_delta(n, alpha, theta):
    return gamma_q(float(n), alpha) / (1.0 - theta)


def _exponential_inverse(n, alpha, t):
    t = np.asarray(t, dtype=float)
    if np.any(t <= 0.0):
        raise AttainableRangeError("exponential generator: t must be > 0", (0.0, math.inf))
    out = 1.0 - gamma_q(float(n), alpha) / t
    return float(out) if out.ndim == 0 else out


def _exponential_sampler(theta, rng, size):
    count = int(np.prod(size))
    return (standard_gamma(rng, 1.0, count) / (1.0 - theta)).reshape(size)


def _exponential_length(n, alpha, theta):
    if n < 2:
        return None
    spread = gamma_q(float(n), 1.0 - 0.5 * alpha) - gamma_q(float(n), 0.5 * alpha)
    return (1.0 - theta) * spread / (n - 1)


def exponential():
    """Standard exponential generator: ``X ~ Exp(rate 1 - theta)``, ``theta < 1``."""
    return NefModel(
        name="exponential",
        psi=lambda theta: -math.log1p(-theta),
        domain=(-math.inf, 1.0),
        delta=_exponential_delta,
        sampler=_exponential_sampler,
        increasing=True,
        theta0=0.0,
        inverse=_exponential_inverse,
        closed_length=_exponential_length,
        min_finite_n=2,
    )


GENERATORS = {"gaussian": gaussian, "exponential": exponential}


def delta_quantile(model, n, alpha, theta):
    """Order-``alpha`` quantile of ``T_n`` under ``theta``."""
    theta = model.check_theta(theta)
    alpha = check_probability(alpha, "alpha")
    if int(n) != n or n < 1:
        raise DomainError("n must be an integer >= 1")
    return model.delta(int(n), alpha, theta)


def _toward(theta0, end, k):
    if math.isinf(end):
        if k >= 1024:
            return end
        return theta0 + math.copysign(2.0 ** k, end)
    return end - (end - theta0) * 0.5 ** (k + 1)


def invert_delta(model, n, alpha, t, closed_form=True):
    """The ``theta`` with ``delta(n, alpha, theta) = t``.

    With ``closed_form=False``, or for a model without ``inverse``, the root
    is bracketed by stepping geometrically from ``theta0`` toward the domain
    end on the side where the residual changes sign, then polished by
    Brent's method.
    """
    alpha = check_probability(alpha, "alpha")
    t = float(t)
    if closed_form and model.inverse is not None:
        return model.inverse(int(n), alpha, t)

    def g(theta):
        return model.delta(int(n), alpha, theta) - t

    lo_end, hi_end = model.domain
    x0 = model.theta0
    g0 = g(x0)
    if g0 == 0.0:
        return x0
    up = (g0 < 0.0) == model.increasing
    end = hi_end if up else lo_end
    prev, gprev = x0, g0
    for k in range(1100):
        x = _toward(x0, end, k)
        if x == prev or not math.isfinite(x):
            break
        gx = g(x)
        if (gx > 0.0) != (g0 > 0.0) or gx == 0.0:
            lo, hi = (prev, x) if prev < x else (x, prev)
            glo, ghi = (gprev, gx) if prev < x else (gx, gprev)
            root = brent(g, lo, hi, flo=glo, fhi=ghi)
            if abs(g(root)) > INVERT_RTOL * max(1.0, abs(t)):
                raise ArithmeticError("inversion residual too large at theta=%r" % root)
            return root
        prev, gprev = x, gx
    reached = model.delta(int(n), alpha, prev)
    near = model.delta(int(n), alpha, x0)
    attainable = tuple(sorted((reached, near)))
    raise AttainableRangeError(
        "t=%r is not attained by delta(n=%d, alpha=%r, .); searched values span %r"
        % (t, n, alpha, attainable), attainable)


def nef_interval(model, n, alpha, t, closed_form=True):
    """Level ``1 - alpha`` interval ``(theta_lo, theta_hi)`` for the observed sum ``t``."""
    alpha = check_probability(alpha, "alpha")
    a = invert_delta(model, n, 1.0 - 0.5 * alpha, t, closed_form)
    b = invert_delta(model, n, 0.5 * alpha, t, closed_form)
    return (a, b) if model.increasing else (b, a)


@dataclass(frozen=True)
class NefLengthRecord:
    n: int
    mean_length: float
    se: float
    closed_form: float = None


@dataclass(frozen=True)
class NefLengthCurve:
    model_name: str
    theta: float
    alpha: float
    records: list = field(default_factory=list)

    @property
    def empirically_decreasing(self):
        m = [r.mean_length for r in self.records]
        return all(b < a for a, b in zip(m, m[1:]))

    @property
    def closed_form_decreasing(self):
        c = [r.closed_form for r in self.records]
        if any(v is None for v in c):
            return None
        return all(b < a for a, b in zip(c, c[1:]))


def mean_length_scan(model, theta, alpha, n_min, n_max, reps, seed=0, workers=1):
    """Monte Carlo mean length per ``n``, alongside the closed form when known."""
    theta = model.check_theta(theta)
    alpha = check_probability(alpha, "alpha")
    if int(n_min) != n_min or n_min < 1 or n_max < n_min:
        raise DomainError("need 1 <= n_min <= n_max")
    records = []
    for n in range(int(n_min), int(n_max) + 1):
        rep = mc.simulate_nef(model, theta, n, alpha, reps, seed, workers)
        closed = model.closed_length(n, alpha, theta) if model.closed_length else None
        records.append(NefLengthRecord(n, rep.mean_length_hat, rep.se_length, closed))
    return NefLengthCurve(model.name, theta, alpha, records)
