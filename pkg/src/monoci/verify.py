"""Numerical certification suites behind ``monoci verify``.

Each suite returns a list of :class:`Check`; ``margin`` is the smallest slack
over the suite's grid (positive means the inequality held everywhere).
"""

import math
from dataclasses import dataclass

import numpy as np

from . import bounds, cilength, specfun
from .cilength import CiFamily, gamma_q
from .crossing import gamma_scale_crossing, normal_variance_crossing

GAMMA_SHAPES = (0.5, 1.0, 2.0, 5.0)
LENGTH_ALPHAS = (0.01, 0.05, 0.1)
STUDENT_ALPHAS = (0.005, 0.025, 0.05, 0.25)


@dataclass(frozen=True)
class Check:
    check_id: str
    passed: bool
    margin: float


def _min_check(check_id, margins):
    m = float(min(margins))
    return Check(check_id, m > 0.0, m)


def lemma2_grid():
    """10^4 log-spaced points in (1e-3, 1e4] plus the semi-integers k/2, k = 1..200."""
    log_grid = np.logspace(-3, 4, 10_000)
    semi = [k / 2.0 for k in range(1, 201)]
    return list(log_grid), semi


def suite_lemma2():
    log_grid, semi = lemma2_grid()
    out = []
    for label, grid in (("log_grid", log_grid), ("semi_integer", semi)):
        checks = [bounds.lemma2_check(x) for x in grid]
        # relative margins so the large-x end is not swamped by scale
        out.append(_min_check("lemma2.%s.lower" % label,
                              [c.lower_margin / c.ratio for c in checks]))
        out.append(_min_check("lemma2.%s.upper" % label,
                              [c.upper_margin / c.ratio for c in checks]))
    return out


E_CLOSED = {
    2: 1.0 / math.sqrt(2.0 * math.pi),
    3: math.sqrt(math.pi) / (2.0 * math.sqrt(6.0)),
    4: 1.0 / math.sqrt(3.0 * math.pi),
}


def suite_en_chain(n_max=10_000):
    out = []
    for n, v in E_CLOSED.items():
        out.append(Check("en_chain.closed_form.E%d" % n, abs(bounds.e_n(n) - v) <= 1e-9,
                         1e-9 - abs(bounds.e_n(n) - v)))
    e = [bounds.e_n(n) for n in range(2, n_max + 2)]
    out.append(_min_check("en_chain.strictly_decreasing",
                          [(e[i] - e[i + 1]) / e[i] for i in range(n_max - 1)]))
    comps = [bounds.e_n_bound_comparison(n) for n in range(4, n_max + 1)]
    out.append(_min_check("en_chain.bound_separation_n_ge_4",
                          [c.margin / c.lower_bound_En for c in comps]))
    sandwich = []
    for c in comps:
        sandwich.append(bounds.e_n(c.n) - c.lower_bound_En)
        sandwich.append(c.upper_bound_En1 - bounds.e_n(c.n + 1))
    out.append(_min_check("en_chain.bound_sandwich", sandwich))
    return out


ORDER_ALPHAS = (1e-6, 0.001, 0.01, 0.05, 0.25, 0.5, 0.75, 0.95, 0.99, 0.999, 1 - 1e-6)


def suite_ordering(n_max=50):
    raw, low, high = [], [], []
    for a in GAMMA_SHAPES:
        for n in range(1, n_max + 1):
            for p in ORDER_ALPHAS:
                lo, hi = gamma_q(n * a, p), gamma_q((n + 1) * a, p)
                raw.append((hi - lo) / hi)
            rep = gamma_scale_crossing(n, a)
            for u in (0.5 * rep.alpha_star, 0.9 * rep.alpha_star):
                low.append(cilength.normalized_gamma_quantile(n + 1, a, u)
                           - cilength.normalized_gamma_quantile(n, a, u))
            for u in (rep.alpha_star + 0.1 * (1 - rep.alpha_star),
                      rep.alpha_star + 0.9 * (1 - rep.alpha_star)):
                high.append(cilength.normalized_gamma_quantile(n, a, u)
                            - cilength.normalized_gamma_quantile(n + 1, a, u))
    return [
        _min_check("ordering.unit_scale_stochastic_order", raw),
        _min_check("ordering.reversal_below_alpha_star", low),
        _min_check("ordering.reversal_above_alpha_star", high),
    ]


def sign_pattern_margins(report, points=100):
    """Min of ``F1 - F2`` below ``x*`` and of ``F2 - F1`` above it, on log grids."""
    pair = report.pair
    x_lo = pair.first.quantile(1e-8)
    x_hi = max(pair.first.quantile(1 - 1e-6), pair.second.quantile(1 - 1e-6))
    left = np.geomspace(x_lo, report.x_star * (1 - 1e-6), points)
    right = np.geomspace(report.x_star * (1 + 1e-6), x_hi, points)
    return (min(pair.cdf_difference(x) for x in left),
            min(-pair.cdf_difference(x) for x in right))


def crossing_reports(n_max=50):
    reps = []
    for a in (0.5, 1.0, 2.0):
        reps += [("gamma_scale_a%g" % a, n, gamma_scale_crossing(n, a))
                 for n in range(1, n_max + 1)]
    reps += [("normal_variance", n, normal_variance_crossing(n)) for n in range(2, n_max + 1)]
    return reps


def suite_crossing(n_max=50):
    order, resid, left, right = [], [], [], []
    for _, _, rep in crossing_reports(n_max):
        order.append(min(rep.x_star - rep.c1, rep.c2 - rep.x_star))
        resid.append(1e-11 - rep.residual)
        lm, rm = sign_pattern_margins(rep)
        left.append(lm)
        right.append(rm)
    return [
        _min_check("crossing.c1_lt_xstar_lt_c2", order),
        _min_check("crossing.residual_le_1e-11", resid),
        _min_check("crossing.sign_pattern_below", left),
        _min_check("crossing.sign_pattern_above", right),
    ]


def suite_monotonicity(n_max=100):
    out = []
    thm, eq_lo, eq_hi = [], [], []
    for a in GAMMA_SHAPES:
        reports = {n: gamma_scale_crossing(n, a) for n in range(1, n_max + 1)}
        for alpha in LENGTH_ALPHAS:
            for n in range(1, n_max + 1):
                if not alpha < reports[n].alpha_star:
                    continue
                thm.append(cilength.gamma_scale_mean_length(n, a, alpha)
                           - cilength.gamma_scale_mean_length(n + 1, a, alpha))
                q = cilength.normalized_gamma_quantile
                eq_lo.append(q(n + 1, a, 0.5 * alpha) - q(n, a, 0.5 * alpha))
                eq_hi.append(q(n, a, 1 - 0.5 * alpha) - q(n + 1, a, 1 - 0.5 * alpha))
    out.append(_min_check("monotonicity.gamma_scale_length", thm))
    out.append(_min_check("monotonicity.normalized_quantile_lower", eq_lo))
    out.append(_min_check("monotonicity.normalized_quantile_upper", eq_hi))

    tq = []
    for alpha in STUDENT_ALPHAS:
        t = [specfun.student_t_quantile(d, 1 - alpha) for d in range(1, 201)]
        tq += [t[i] - t[i + 1] for i in range(len(t) - 1)]
    out.append(_min_check("monotonicity.student_quantile_in_dof", tq))

    def drops(family, alphas, n_lo, n_hi):
        res = []
        for alpha in alphas:
            L = cilength.monotonicity_scan(family, alpha, n_lo, n_hi).lengths
            res += [(L[i] - L[i + 1]) / L[i] for i in range(len(L) - 1)]
        return res

    out.append(_min_check("monotonicity.normal_mean_length",
                          drops(CiFamily.normal_mean(), (0.01, 0.05, 0.2), 2, 200)))
    out.append(_min_check("monotonicity.normal_variance_length",
                          drops(CiFamily.normal_variance(), (0.01, 0.05, 0.1), 2, n_max)))
    out.append(_min_check("monotonicity.pareto_length",
                          drops(CiFamily.pareto(2.0), (0.01, 0.05, 0.1), 2, n_max)))
    out.append(_min_check("monotonicity.uniform_length",
                          drops(CiFamily.uniform_scale(), (0.01, 0.05, 0.5, 0.9), 1, 1000)))
    return out


SUITES = {
    "lemma2": suite_lemma2,
    "en-chain": suite_en_chain,
    "ordering": suite_ordering,
    "crossing": suite_crossing,
    "monotonicity": suite_monotonicity,
}


def run_suite(name):
    if name == "all":
        out = []
        for fn in SUITES.values():
            out += fn()
        return out
    return SUITES[name]()
