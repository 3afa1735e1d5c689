"""Reference computations kept independent of the package's own kernels.

Plain bisection on closed forms, and scipy's incomplete gamma for the
fine-grid crossing scan.
"""

import math

import numpy as np
from scipy import special


def bisect(f, lo, hi, iters=200):
    flo = f(lo)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        fm = f(mid)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def erlang2_cdf(x):
    return 1.0 - math.exp(-x) * (1.0 + x)


def erlang2_quantile(p):
    return bisect(lambda x: erlang2_cdf(x) - p, 0.0, 100.0)


def exp_quantile(p):
    return -math.log1p(-p)


def exp_vs_erlang_root():
    """Root of e^x = 1 + 2x on (0.5, 3): the CDF crossing of Gamma(1,1) and Gamma(2,1/2)."""
    return bisect(lambda x: math.exp(x) - 1.0 - 2.0 * x, 0.5, 3.0)


def scipy_cdf_diff(a1, b1, a2, b2, x):
    """F1 - F2 with the upper tail taken through gammaincc."""
    x = np.asarray(x, dtype=float)
    p1 = special.gammainc(a1, x / b1)
    low = p1 <= 0.5
    return np.where(low, p1 - special.gammainc(a2, x / b2),
                    special.gammaincc(a2, x / b2) - special.gammaincc(a1, x / b1))


def grid_scan_crossing(a1, b1, a2, b2, points=10_000, tail=1e-8, log=False):
    """Sign changes of F1 - F2 on a grid between the ``tail`` and ``1 - tail`` quantiles.

    The grid spans both laws and is linear unless ``log`` is set.  Returns
    ``(crossings, alpha_star)`` where ``crossings`` are the grid cells
    holding a sign change and ``alpha_star`` refines the single cell by
    bisection and evaluates F1 there (None unless exactly one change).
    """
    lo = min(b1 * special.gammaincinv(a1, tail), b2 * special.gammaincinv(a2, tail))
    hi = max(b1 * special.gammainccinv(a1, tail), b2 * special.gammainccinv(a2, tail))
    xs = np.geomspace(lo, hi, points) if log else np.linspace(lo, hi, points)
    d = scipy_cdf_diff(a1, b1, a2, b2, xs)
    s = np.sign(d)
    idx = np.nonzero(s[:-1] * s[1:] < 0)[0]
    cells = [(xs[i], xs[i + 1]) for i in idx]
    if len(cells) != 1:
        return cells, None
    c_lo, c_hi = cells[0]
    x = bisect(lambda v: float(scipy_cdf_diff(a1, b1, a2, b2, v)), c_lo, c_hi)
    return cells, float(special.gammainc(a1, x / b1))


def gamma_scale_pair(n, a):
    return n * a, 1.0 / (n * a), (n + 1) * a, 1.0 / ((n + 1) * a)


def normal_variance_pair(n):
    return 0.5 * (n - 1), 2.0 / (n - 1), 0.5 * n, 2.0 / n
