"""Special functions on the positive reals.

Log-gamma, regularized incomplete gamma and beta functions with their
inverses, and the normal and Student-t quantiles.  Everything is scalar,
pure Python on top of :mod:`math`, and stateless.

Branch layout of :func:`log_gamma`:

* ``|x - 1| <= 0.2`` or ``|x - 2| <= 0.2`` or ``x < 0.2``: Taylor series of
  ``ln Gamma(1 + e)`` in zeta values, which keeps relative accuracy near the
  zeros of ``ln Gamma`` at 1 and 2;
* ``x >= 10``: Stirling series with Bernoulli corrections;
* otherwise: Lanczos approximation, ``g = 7``, nine terms.
"""

import math

from .errors import ConvergenceError, DomainError

EPS = 2.220446049250313e-16
MAX_ITER = 200
_LOG_TINY = math.log(5e-324)
LN_SQRT_2PI = 0.9189385332046727418
EULER_GAMMA = 0.57721566490153286061

# zeta(k) for k = 2..25
_ZETA = (
    1.6449340668482264365, 1.2020569031595942854, 1.0823232337111381915,
    1.0369277551433699263, 1.0173430619844491397, 1.0083492773819228268,
    1.0040773561979443394, 1.0020083928260822144, 1.0009945751278180853,
    1.0004941886041194646, 1.0002460865533080483, 1.0001227133475784891,
    1.0000612481350587048, 1.0000305882363070205, 1.0000152822594086519,
    1.0000076371976378998, 1.0000038172932649998, 1.0000019082127165539,
    1.0000009539620338728, 1.0000004769329867878, 1.0000002384505027277,
    1.0000001192199259653, 1.0000000596081890513, 1.0000000298035035147,
)

_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993227684700473478,
    676.520368121885098567009190444019,
    -1259.13921672240287047156078755283,
    771.3234287776530788486528258894,
    -176.61502916214059906584551354,
    12.507343278686904814458936853,
    -0.13857109526572011689554707,
    9.984369578019570859563e-6,
    1.50563273514931155834e-7,
)

# B_{2k} / (2k (2k - 1)) for k = 1..8
_STIRLING = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
)


def check_positive(x, name="x"):
    """Return ``float(x)`` if it is finite and strictly positive."""
    x = float(x)
    if not (x > 0.0 and math.isfinite(x)):
        raise DomainError("%s must be finite and > 0, got %r" % (name, x))
    return x


def check_probability(p, name="p"):
    """Return ``float(p)`` if it lies in the open interval (0, 1)."""
    p = float(p)
    if not 0.0 < p < 1.0:
        raise DomainError("%s must lie in (0, 1), got %r" % (name, p))
    return p


def _lgamma1p_series(e):
    """ln Gamma(1 + e) for |e| <= 0.2."""
    s = 0.0
    pw = -e
    for k, z in enumerate(_ZETA, start=2):
        pw *= -e
        s += z * pw / k
    return s - EULER_GAMMA * e


def _stirling_tail(x):
    """Stirling correction sum; x >= 10."""
    r = 1.0 / x
    r2 = r * r
    s = 0.0
    for c in reversed(_STIRLING):
        s = s * r2 + c
    return s * r


def log_gamma(x):
    """Natural log of the gamma function for ``x > 0``."""
    x = check_positive(x)
    if x < 0.2:
        return _lgamma1p_series(x) - math.log(x)
    if abs(x - 1.0) <= 0.2:
        return _lgamma1p_series(x - 1.0)
    if abs(x - 2.0) <= 0.2:
        e = x - 2.0
        return math.log1p(e) + _lgamma1p_series(e)
    if x >= 10.0:
        return (x - 0.5) * math.log(x) - x + LN_SQRT_2PI + _stirling_tail(x)
    z = x - 1.0
    acc = _LANCZOS[0]
    for i in range(1, len(_LANCZOS)):
        acc += _LANCZOS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return LN_SQRT_2PI + (z + 0.5) * math.log(t) - t + math.log(acc)


def log_gamma_diff(x, h):
    """``ln Gamma(x + h) - ln Gamma(x)`` without cancellation at large ``x``."""
    x = check_positive(x)
    if h == 0.0:
        return 0.0
    if x >= 10.0 and x + h >= 10.0:
        return ((x - 0.5) * math.log1p(h / x) + h * math.log(x + h) - h
                + _stirling_tail(x + h) - _stirling_tail(x))
    return log_gamma(x + h) - log_gamma(x)


def log_beta(a, b):
    """ln B(a, b)."""
    a = check_positive(a, "a")
    b = check_positive(b, "b")
    if a < b:
        a, b = b, a
    # a is the larger argument; lnB = lnG(b) - (lnG(a + b) - lnG(a))
    return log_gamma(b) - log_gamma_diff(a, b)


def _log1pmx(m):
    """log(1 + m) - m."""
    if abs(m) > 0.2:
        return math.log1p(m) - m
    s = 0.0
    pw = -m
    k = 2
    while True:
        pw *= -m
        term = -pw / k
        s += term
        if abs(term) <= EPS * abs(s):
            return s
        k += 1


def _gamma_prefix(a, x):
    """``x**a * exp(-x) / Gamma(a)``, accurate also for large ``a`` near ``x = a``."""
    m = (x - a) / a
    if a < 10.0 or m < -0.5:
        # far from the peak there is no cancellation to protect against
        return math.exp(a * math.log(x) - x - log_gamma(a))
    return math.exp(a * _log1pmx(m) - _stirling_tail(a)) * math.sqrt(a / (2.0 * math.pi))


def _iter_cap(a):
    return MAX_ITER + int(20.0 * math.sqrt(a))


def _gamma_pq(a, x):
    """Return ``(P(a, x), Q(a, x))``; the smaller one is computed directly."""
    if x == 0.0:
        return 0.0, 1.0
    if math.isinf(x):
        return 1.0, 0.0
    pre = _gamma_prefix(a, x)
    cap = _iter_cap(a)
    if x < a + 1.0:
        ap = a
        term = 1.0 / a
        s = term
        for _ in range(cap):
            ap += 1.0
            term *= x / ap
            s += term
            if abs(term) < abs(s) * EPS:
                p = min(pre * s, 1.0)
                return p, 1.0 - p
        raise ConvergenceError("incomplete gamma series: a=%r, x=%r" % (a, x))
    # modified Lentz evaluation of the continued fraction for Q
    tiny = 1e-300
    b = x + 1.0 - a
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, cap):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < EPS:
            q = min(pre * h, 1.0)
            return 1.0 - q, q
    raise ConvergenceError("incomplete gamma continued fraction: a=%r, x=%r" % (a, x))


def _check_gamma_args(a, x):
    a = check_positive(a, "a")
    x = float(x)
    if not x >= 0.0:
        raise DomainError("x must be >= 0, got %r" % x)
    return a, x


def reg_gamma_p(a, x):
    """Regularized lower incomplete gamma function P(a, x)."""
    a, x = _check_gamma_args(a, x)
    return _gamma_pq(a, x)[0]


def reg_gamma_q(a, x):
    """Regularized upper incomplete gamma function Q(a, x) = 1 - P(a, x)."""
    a, x = _check_gamma_args(a, x)
    return _gamma_pq(a, x)[1]


def gamma_density(a, x):
    """Density of Gamma(a, 1) at ``x > 0``."""
    return _gamma_prefix(a, x) / x


def _gamma_initial_guess(a, p):
    if a > 1.0:
        z = normal_quantile(p)
        c = 1.0 / (9.0 * a)
        w = 1.0 - c + z * math.sqrt(c)
        if w > 0.0:
            return a * w * w * w
        # Wilson-Hilferty breaks down deep in the left tail
        return math.exp((math.log(p) + log_gamma(a + 1.0)) / a)
    t = 1.0 - a * (0.253 + a * 0.12)
    if p < t:
        return (p / t) ** (1.0 / a)
    return 1.0 - math.log1p(-(p - t) / (1.0 - t))


def inv_reg_gamma_p(a, p):
    """Quantile of Gamma(a, 1): the ``x`` with ``P(a, x) = p``.

    Wilson-Hilferty start, then Halley steps kept inside a sign bracket with
    bisection whenever a step leaves it.  In the upper half the residual is
    taken on Q so that ``p`` close to 1 keeps its precision.  Returns 0.0
    when the quantile underflows (tiny ``a`` together with tiny ``p``).
    """
    a = check_positive(a, "a")
    p = check_probability(p)
    upper = p > 0.5
    target = 1.0 - p if upper else p
    if not upper and (math.log(p) + log_gamma(a + 1.0)) / a < _LOG_TINY:
        # leading term P ~ x^a / Gamma(a + 1): the root is below every positive double
        return 0.0

    def resid(x):
        pp, qq = _gamma_pq(a, x)
        # increasing in x in both branches
        return target - qq if upper else pp - target

    lo, hi = 0.0, math.inf
    x = _gamma_initial_guess(a, p)
    if not (x > 0.0 and math.isfinite(x)):
        x = a
    for _ in range(MAX_ITER):
        f = resid(x)
        if f == 0.0:
            return x
        if f < 0.0:
            lo = x
        else:
            hi = x
        dens = _gamma_prefix(a, x) / x
        step = f / dens if dens > 0.0 else math.nan
        if math.isfinite(step):
            corr = 1.0 - 0.5 * step * ((a - 1.0) / x - 1.0)
            if corr > 0.5:
                step /= corr
            x_new = x - step
        else:
            x_new = math.nan
        if abs(x_new - x) <= 4.0 * EPS * x:
            return x_new
        if not (lo < x_new < hi):
            x_new = 0.5 * (lo + hi) if math.isfinite(hi) else 2.0 * max(x, lo)
        if math.isfinite(hi) and hi - lo <= 4.0 * EPS * hi:
            return x_new
        x = x_new
    raise ConvergenceError("inv_reg_gamma_p: a=%r, p=%r" % (a, p), bracket=(lo, hi))


def _check_beta_x(x):
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise DomainError("x must lie in [0, 1], got %r" % x)
    return x


def _betacf(a, b, x):
    tiny = 1e-300
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < tiny:
        d = tiny
    d = 1.0 / d
    h = d
    for m in range(1, _iter_cap(max(a, b)) + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < EPS:
            return h
    raise ConvergenceError("incomplete beta continued fraction: a=%r, b=%r, x=%r" % (a, b, x))


def _beta_prefix(a, b, x):
    """``x**a (1 - x)**b / B(a, b)``.

    For ``a, b >= 10`` the Stirling split of ``B`` lets the exponent be
    written around ``x0 = a / (a + b)`` with the linear terms cancelled.
    """
    if a < 10.0 or b < 10.0:
        return math.exp(a * math.log(x) + b * math.log1p(-x) - log_beta(a, b))
    ab = a + b
    x0 = a / ab
    u = (x - x0) / x0
    v = (x0 - x) / (1.0 - x0)
    if u < -0.5 or v < -0.5:
        expo = a * math.log(x / x0) + b * math.log1p(-x) - b * math.log(b / ab)
    else:
        expo = a * _log1pmx(u) + b * _log1pmx(v)
    tails = _stirling_tail(a) + _stirling_tail(b) - _stirling_tail(ab)
    return math.exp(expo - tails) * math.sqrt(a * b / ab / (2.0 * math.pi))


def _beta_pq(a, b, x):
    """Return ``(I_x(a, b), 1 - I_x(a, b))`` with the smaller side computed directly."""
    if x == 0.0:
        return 0.0, 1.0
    if x == 1.0:
        return 1.0, 0.0
    front = _beta_prefix(a, b, x)
    if x < (a + 1.0) / (a + b + 2.0):
        v = min(front * _betacf(a, b, x) / a, 1.0)
        return v, 1.0 - v
    w = min(front * _betacf(b, a, 1.0 - x) / b, 1.0)
    return 1.0 - w, w


def reg_inc_beta(a, b, x):
    """Regularized incomplete beta function I_x(a, b)."""
    a = check_positive(a, "a")
    b = check_positive(b, "b")
    x = _check_beta_x(x)
    return _beta_pq(a, b, x)[0]


def inv_reg_inc_beta(a, b, p):
    """The ``x`` in (0, 1) with ``I_x(a, b) = p``."""
    a = check_positive(a, "a")
    b = check_positive(b, "b")
    p = check_probability(p)
    # work on whichever tail puts the root nearer zero
    if p > 0.5:
        return 1.0 - _inv_beta_lower(b, a, 1.0 - p)
    return _inv_beta_lower(a, b, p)


def _inv_beta_initial(a, b, p):
    if a >= 1.0 and b >= 1.0:
        pp = p if p < 0.5 else 1.0 - p
        t = math.sqrt(-2.0 * math.log(pp))
        x = (2.30753 + t * 0.27061) / (1.0 + t * (0.99229 + t * 0.04481)) - t
        if p < 0.5:
            x = -x
        al = (x * x - 3.0) / 6.0
        h = 2.0 / (1.0 / (2.0 * a - 1.0) + 1.0 / (2.0 * b - 1.0))
        w = (x * math.sqrt(al + h) / h
             - (1.0 / (2.0 * b - 1.0) - 1.0 / (2.0 * a - 1.0)) * (al + 5.0 / 6.0 - 2.0 / (3.0 * h)))
        return a / (a + b * math.exp(2.0 * w))
    lna = math.log(a / (a + b))
    lnb = math.log(b / (a + b))
    t = math.exp(a * lna) / a
    u = math.exp(b * lnb) / b
    w = t + u
    if p < t / w:
        return (a * w * p) ** (1.0 / a)
    return 1.0 - (b * w * (1.0 - p)) ** (1.0 / b)


def _inv_beta_lower(a, b, p):
    """Solve I_x(a, b) = p with p <= 0.5 by safeguarded Halley steps."""
    lbeta = log_beta(a, b)
    lo, hi = 0.0, 1.0
    x = _inv_beta_initial(a, b, p)
    if not 0.0 < x < 1.0:
        x = 0.5
    for _ in range(MAX_ITER):
        f = _beta_pq(a, b, x)[0] - p
        if f == 0.0:
            return x
        if f < 0.0:
            lo = x
        else:
            hi = x
        logdens = (a - 1.0) * math.log(x) + (b - 1.0) * math.log1p(-x) - lbeta
        step = f / math.exp(logdens) if logdens < 700.0 else 0.0
        corr = 1.0 - 0.5 * step * ((a - 1.0) / x - (b - 1.0) / (1.0 - x))
        if corr > 0.5:
            step /= corr
        x_new = x - step
        if abs(x_new - x) <= 4.0 * EPS * x:
            return x_new
        if not (lo < x_new < hi) or not math.isfinite(x_new):
            x_new = 0.5 * (lo + hi)
        if hi - lo <= 4.0 * EPS * hi:
            return x_new
        x = x_new
    raise ConvergenceError("inverse incomplete beta: a=%r, b=%r, p=%r" % (a, b, p),
                           bracket=(lo, hi))


def student_t_quantile(d, p):
    """Order-``p`` quantile of Student's t with ``d`` degrees of freedom.

    With tail mass ``q = min(p, 1 - p)``, ``P(|T| > t) = I_{d/(d+t^2)}(d/2, 1/2) = 2q``.
    Whenever ``1 - p`` is exact in floating point, ``p`` and ``1 - p`` map to
    the same ``q`` and the two quantiles are exact negatives.
    """
    d = check_positive(d, "d")
    p = check_probability(p)
    if p == 0.5:
        return 0.0
    q = p if p < 0.5 else 1.0 - p
    two_q = 2.0 * q
    # y = d / (d + t^2); for large tail mass y is near 1, so solve for 1 - y instead
    if two_q < 0.5:
        y = inv_reg_inc_beta(0.5 * d, 0.5, two_q)
        t = math.sqrt(d * (1.0 - y) / y)
    else:
        w = inv_reg_inc_beta(0.5, 0.5 * d, 1.0 - two_q)
        t = math.sqrt(d * w / (1.0 - w))
    return t if p > 0.5 else -t


# Acklam's rational approximation to the normal quantile
_NQ_A = (-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
         1.383577518672690e+02, -3.066479806614716e+01, 2.506628277459239e+00)
_NQ_B = (-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
         6.680131188771972e+01, -1.328068155288572e+01)
_NQ_C = (-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
         -2.549732539343734e+00, 4.374664141464968e+00, 2.938163982698783e+00)
_NQ_D = (7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
         3.754408661907416e+00)


def normal_cdf(x):
    """Standard normal CDF via erfc."""
    return 0.5 * math.erfc(-x / math.sqrt(2.0))


def normal_quantile(p):
    """Standard normal quantile; rational start plus one Halley step on erfc."""
    p = check_probability(p)
    if p == 0.5:
        return 0.0
    q = p if p < 0.5 else 1.0 - p
    if q < 0.02425:
        r = math.sqrt(-2.0 * math.log(q))
        c, d = _NQ_C, _NQ_D
        x = (((((c[0] * r + c[1]) * r + c[2]) * r + c[3]) * r + c[4]) * r + c[5]) / \
            ((((d[0] * r + d[1]) * r + d[2]) * r + d[3]) * r + 1.0)
    else:
        r = q - 0.5
        s = r * r
        a, b = _NQ_A, _NQ_B
        x = (((((a[0] * s + a[1]) * s + a[2]) * s + a[3]) * s + a[4]) * s + a[5]) * r / \
            (((((b[0] * s + b[1]) * s + b[2]) * s + b[3]) * s + b[4]) * s + 1.0)
    # x approximates the lower-tail quantile of q (x < 0); refine on that tail
    e = 0.5 * math.erfc(-x / math.sqrt(2.0)) - q
    u = e * math.sqrt(2.0 * math.pi) * math.exp(0.5 * x * x)
    x = x - u / (1.0 + 0.5 * x * u)
    return x if p < 0.5 else -x
