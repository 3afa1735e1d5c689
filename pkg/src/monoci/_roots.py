"""Bracketed scalar root finding."""

import math

from .errors import ConvergenceError

_EPS = 2.220446049250313e-16


def brent(f, lo, hi, flo=None, fhi=None, xtol=0.0, max_iter=200):
    """Brent's method on ``[lo, hi]``; ``f(lo)`` and ``f(hi)`` must differ in sign.

    Iterates until the bracket is within ``xtol + 4 eps |x|`` or ``f`` is
    exactly zero, so the default ``xtol=0`` gives a root to full precision.
    """
    a, b = lo, hi
    fa = f(a) if flo is None else flo
    fb = f(b) if fhi is None else fhi
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if (fa > 0) == (fb > 0):
        raise ValueError("root is not bracketed: f(%r)=%r, f(%r)=%r" % (a, fa, b, fb))
    c, fc = a, fa
    d = e = b - a
    for _ in range(max_iter):
        if (fb > 0) == (fc > 0):
            c, fc = a, fa
            d = e = b - a
        if abs(fc) < abs(fb):
            a, b, c = b, c, b
            fa, fb, fc = fb, fc, fb
        tol = 2.0 * _EPS * abs(b) + 0.5 * xtol
        m = 0.5 * (c - b)
        if abs(m) <= tol or fb == 0.0:
            return b
        if abs(e) >= tol and abs(fa) > abs(fb):
            s = fb / fa
            if a == c:
                p = 2.0 * m * s
                q = 1.0 - s
            else:
                q = fa / fc
                r = fb / fc
                p = s * (2.0 * m * q * (q - r) - (b - a) * (r - 1.0))
                q = (q - 1.0) * (r - 1.0) * (s - 1.0)
            if p > 0:
                q = -q
            else:
                p = -p
            if 2.0 * p < min(3.0 * m * q - abs(tol * q), abs(e * q)):
                e, d = d, p / q
            else:
                d = e = m
        else:
            d = e = m
        a, fa = b, fb
        b += d if abs(d) > tol else math.copysign(tol, m)
        fb = f(b)
    raise ConvergenceError("brent: no convergence in %d iterations" % max_iter,
                           bracket=tuple(sorted((b, c))))


def expand_up(f, x0, positive=True, max_doublings=1024):
    """Double ``x0`` until ``f`` has the requested sign; returns ``(x, f(x))``."""
    x = x0
    for _ in range(max_doublings):
        x *= 2.0
        fx = f(x)
        if (fx > 0) == positive and fx != 0.0:
            return x, fx
    raise ConvergenceError("no sign change after %d doublings" % max_doublings,
                           bracket=(x0, x))


def expand_down(f, x0, positive=True, max_halvings=1024):
    """Halve ``x0`` (toward zero) until ``f`` has the requested sign."""
    x = x0
    for _ in range(max_halvings):
        x *= 0.5
        if x == 0.0:
            break
        fx = f(x)
        if (fx > 0) == positive and fx != 0.0:
            return x, fx
    raise ConvergenceError("no sign change after halving toward zero",
                           bracket=(x, x0))
