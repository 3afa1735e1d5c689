"""Seeded Monte Carlo check of coverage and mean length.

Reproducibility rule
--------------------
Replications are cut into blocks of ``BLOCK`` (the last block may be
shorter).  Block ``j`` of a run at sample size ``n`` with master seed ``s``
draws from its own PCG64 stream::

    numpy.random.Generator(numpy.random.PCG64(
        numpy.random.SeedSequence(s, spawn_key=(n, j))))

Samplers consume that stream only through ``Generator.random`` (see
:mod:`monoci.dist`).  Block results are merged in block order with the
pairwise mean/variance update, so the report does not depend on how many
workers run the blocks.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import cilength
from .cilength import CiFamily
from .dist import GammaSpec, Normal, Pareto, UniformScale
from .errors import DomainError
from .specfun import check_probability

BLOCK = 10_000


def block_rng(seed, n, block):
    """Generator for replication block ``block`` of a run at sample size ``n``."""
    ss = np.random.SeedSequence(int(seed), spawn_key=(int(n), int(block)))
    return np.random.Generator(np.random.PCG64(ss))


@dataclass(frozen=True)
class McConfig:
    family: CiFamily
    n: int
    alpha: float
    replications: int
    seed: int = 0

    def __post_init__(self):
        if not isinstance(self.family, CiFamily):
            raise DomainError("family must be a CiFamily")
        check_probability(self.alpha, "alpha")
        if int(self.replications) != self.replications or self.replications < 1:
            raise DomainError("replications must be an integer >= 1")
        if int(self.seed) != self.seed or not 0 <= self.seed < 2 ** 64:
            raise DomainError("seed must be an unsigned 64-bit integer")
        n_min = 1 if self.family.name in ("gamma_scale", "uniform_scale", "pareto") else 2
        if int(self.n) != self.n or self.n < n_min:
            raise DomainError("%s needs n >= %d, got %r" % (self.family.name, n_min, self.n))


@dataclass(frozen=True)
class McReport:
    coverage_hat: float
    mean_length_hat: float
    se_coverage: float
    se_length: float
    replications_used: int
    length_finite: bool = True

    def coverage_z(self, nominal):
        """Standardized gap between observed and nominal coverage."""
        if self.se_coverage == 0.0:
            return 0.0 if self.coverage_hat == nominal else math.inf
        return (self.coverage_hat - nominal) / self.se_coverage

    def length_z(self, analytic):
        if self.se_length == 0.0:
            return 0.0 if self.mean_length_hat == analytic else math.inf
        return (self.mean_length_hat - analytic) / self.se_length


def _draw_intervals(family, n, alpha, m, rng):
    """Intervals from ``m`` samples of size ``n``; returns ``(lo, hi, truth)``."""
    name = family.name
    if name == "gamma_scale":
        x = GammaSpec(family.shape, family.scale).sample(rng, (m, n))
        lo, hi = cilength.gamma_scale_interval(x.mean(axis=1), n, family.shape, alpha)
        return lo, hi, family.scale
    if name == "normal_variance":
        x = Normal(family.mu, math.sqrt(family.scale)).sample(rng, (m, n))
        lo, hi = cilength.normal_variance_interval(x.var(axis=1, ddof=1), n, alpha)
        return lo, hi, family.scale
    if name == "normal_mean":
        x = Normal(family.mu, family.scale).sample(rng, (m, n))
        lo, hi = cilength.normal_mean_interval(x.mean(axis=1), x.std(axis=1, ddof=1), n, alpha)
        return lo, hi, family.mu
    if name == "pareto":
        s = Pareto(family.scale).sample_log_sum(rng, n, m)
        lo, hi = cilength.pareto_interval(s, n, alpha)
        return lo, hi, family.scale
    x = UniformScale(family.scale).sample(rng, (m, n))
    lo, hi = cilength.uniform_interval(x.max(axis=1), n, alpha)
    return lo, hi, family.scale


def _block_stats(lo, hi, truth):
    lo = np.atleast_1d(lo)
    hi = np.atleast_1d(hi)
    covered = int(np.count_nonzero((lo < truth) & (truth < hi)))
    length = hi - lo
    mean = float(length.mean())
    m2 = float(((length - mean) ** 2).sum())
    return length.size, covered, mean, m2


def _merge(stats):
    count = covered = 0
    mean = m2 = 0.0
    for nb, cb, mb, m2b in stats:
        total = count + nb
        delta = mb - mean
        mean += delta * nb / total
        m2 += m2b + delta * delta * count * nb / total
        count = total
        covered += cb
    return count, covered, mean, m2


def _report(stats, length_finite=True):
    count, covered, mean, m2 = _merge(stats)
    cov = covered / count
    se_cov = math.sqrt(cov * (1.0 - cov) / count)
    se_len = math.sqrt(m2 / (count - 1) / count) if count > 1 else 0.0
    return McReport(cov, mean, se_cov, se_len, count, length_finite)


def _blocks(replications):
    full, rest = divmod(replications, BLOCK)
    sizes = [BLOCK] * full
    if rest:
        sizes.append(rest)
    return sizes


def _run_blocks(job, replications, workers):
    sizes = _blocks(replications)
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(job, range(len(sizes)), sizes))
    return [job(j, m) for j, m in enumerate(sizes)]


def simulate(config, workers=1):
    """Empirical coverage and mean length for one family, ``n`` and ``alpha``."""
    fam, n, alpha = config.family, int(config.n), float(config.alpha)

    def job(j, m):
        rng = block_rng(config.seed, n, j)
        return _block_stats(*_draw_intervals(fam, n, alpha, m, rng))

    stats = _run_blocks(job, int(config.replications), workers)
    return _report(stats, length_finite=not (fam.name == "pareto" and n == 1))


def coverage_curve(family, alpha, n_list, reps, seed=0, workers=1):
    """``simulate`` over ``n_list``; the per-n streams come from ``(seed, n)``."""
    return [simulate(McConfig(family, n, alpha, reps, seed), workers) for n in n_list]


def simulate_nef(model, theta, n, alpha, reps, seed=0, workers=1):
    """Coverage and mean length of the quantile-inversion interval of a NEF model.

    Uses the same stream rule as :func:`simulate`.
    """
    model.check_theta(theta)
    alpha = check_probability(alpha, "alpha")
    if int(n) != n or n < 1:
        raise DomainError("n must be an integer >= 1")
    n = int(n)

    def job(j, m):
        rng = block_rng(seed, n, j)
        t = model.sample(theta, rng, (m, n)).sum(axis=1)
        lo, hi = model.interval_many(n, alpha, t)
        return _block_stats(lo, hi, theta)

    return _report(_run_blocks(job, int(reps), workers), model.mean_length_finite(n))
