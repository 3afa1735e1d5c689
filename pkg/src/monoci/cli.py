"""Command-line front end: ``monoci {alpha-star,length,verify,simulate,nef}``.

Tables go to standard output as CSV (header row, quoted strings, floats at
17 significant digits) or as a JSON array of flat objects.  Exit status is
0 on success, 1 on a numerical or verification failure and 2 on bad usage;
nothing is written to standard output unless the command succeeds.
"""

import argparse
import json
import math
import sys

from . import cilength, nef, verify
from .cilength import CiFamily
from .crossing import gamma_scale_crossing, normal_variance_crossing
from .errors import DomainError
from .mc import McConfig, simulate


class UsageError(Exception):
    pass


class NumericFailure(Exception):
    pass


def _cell_csv(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return format(v, ".17g")
    return '"%s"' % str(v).replace('"', '""')


def _cell_json(v):
    if isinstance(v, float) and not math.isfinite(v):
        return None
    return v


def render(columns, rows, fmt):
    """Serialize ``rows`` (sequences aligned with ``columns``) as CSV or JSON text."""
    if fmt == "json":
        objs = [{c: _cell_json(v) for c, v in zip(columns, row)} for row in rows]
        return json.dumps(objs, indent=1) + "\n"
    lines = [",".join(columns)]
    lines += [",".join(_cell_csv(v) for v in row) for row in rows]
    return "\r\n".join(lines) + "\r\n"


def _family_from_args(args):
    fam = args.family.replace("-", "_")
    try:
        if fam == "gamma_scale":
            return CiFamily.gamma_scale(args.shape, args.beta)
        if fam == "normal_variance":
            return CiFamily.normal_variance(args.sigma_sq, args.mu)
        if fam == "normal_mean":
            return CiFamily.normal_mean(args.sigma, args.mu)
        if fam == "pareto":
            return CiFamily.pareto(args.theta if args.theta is not None else 2.0)
        return CiFamily.uniform_scale(args.theta if args.theta is not None else 1.0)
    except DomainError as exc:
        raise UsageError(str(exc)) from exc


def _n_range(args, n_floor, what):
    n_min = n_floor if args.n_min is None else args.n_min
    if n_min < n_floor:
        raise UsageError("%s requires --n-min >= %d (got %d)" % (what, n_floor, n_min))
    if args.n_max < n_min:
        raise UsageError("--n-max must be >= --n-min")
    return range(n_min, args.n_max + 1)


def cmd_alpha_star(args):
    columns = ["n", "alpha_star", "x_star", "c1", "c2", "level_bound"]
    if args.family == "gamma-scale":
        ns = _n_range(args, 1, "gamma-scale")
        if not args.shape > 0:
            raise UsageError("--shape must be > 0")

        def crossing(n):
            return gamma_scale_crossing(n, args.shape)
    else:
        ns = _n_range(args, 2, "normal-variance")
        crossing = normal_variance_crossing
    rows = []
    for n in ns:
        try:
            r = crossing(n)
        except (ArithmeticError, ValueError) as exc:
            raise NumericFailure("n=%d: %s" % (n, exc)) from exc
        rows.append([n, r.alpha_star, r.x_star, r.c1, r.c2, r.level_bound])
    return columns, rows, 0


def cmd_length(args):
    fam = _family_from_args(args)
    if args.family == "pareto" and args.n_min is not None and args.n_min < 2:
        raise UsageError("pareto mean length is infinite at n = 1; use --n-min 2 or more")
    ns = _n_range(args, fam.n_min, args.family)
    try:
        alpha = float(args.alpha)
        curve = cilength.monotonicity_scan(fam, alpha, ns.start, ns.stop - 1)
    except DomainError as exc:
        raise UsageError(str(exc)) from exc
    except ArithmeticError as exc:
        raise NumericFailure(str(exc)) from exc
    columns = ["n", "L_n", "alpha_star", "below_alpha_star"]
    rows = [[r.n, r.length, r.alpha_star, r.below_alpha_star] for r in curve.records]
    return columns, rows, 0


def cmd_verify(args):
    checks = verify.run_suite(args.suite)
    rows = [[c.check_id, c.passed, c.margin] for c in checks]
    status = 0 if all(c.passed for c in checks) else 1
    return ["check_id", "passed", "margin"], rows, status


def cmd_simulate(args):
    fam = _family_from_args(args)
    try:
        cfg = McConfig(fam, args.n, args.alpha, args.reps, args.seed)
    except DomainError as exc:
        raise UsageError(str(exc)) from exc
    rep = simulate(cfg, workers=args.workers)
    analytic = fam.mean_length(args.n, args.alpha) if rep.length_finite else None
    columns = ["family", "n", "alpha", "replications", "coverage_hat", "se_coverage",
               "mean_length_hat", "se_length", "analytic_length"]
    rows = [[fam.name, args.n, float(args.alpha), rep.replications_used, rep.coverage_hat,
             rep.se_coverage, rep.mean_length_hat, rep.se_length, analytic]]
    return columns, rows, 0


def cmd_nef(args):
    model = nef.GENERATORS[args.generator]()
    ns = _n_range(args, 1, "nef")
    try:
        curve = nef.mean_length_scan(model, args.theta, args.alpha, ns.start, ns.stop - 1,
                                     args.reps, args.seed, args.workers)
    except DomainError as exc:
        raise UsageError(str(exc)) from exc
    columns = ["n", "mean_length", "se", "closed_form"]
    rows = [[r.n, r.mean_length, r.se, r.closed_form] for r in curve.records]
    return columns, rows, 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--output", help="write the table to this file instead of stdout")

    def family_params(p):
        p.add_argument("--shape", type=float, default=1.0, help="known gamma shape a")
        p.add_argument("--beta", type=float, default=1.0, help="gamma scale")
        p.add_argument("--sigma-sq", type=float, default=1.0, help="normal variance")
        p.add_argument("--sigma", type=float, default=1.0, help="normal standard deviation")
        p.add_argument("--mu", type=float, default=0.0, help="normal mean")
        p.add_argument("--theta", type=float, default=None,
                       help="Pareto (>1, default 2) or uniform (default 1) parameter")

    parser = argparse.ArgumentParser(
        prog="monoci", description="Mean length of classical confidence intervals versus n.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("alpha-star", parents=[common], help="critical levels per n")
    p.add_argument("--family", required=True, choices=("gamma-scale", "normal-variance"))
    p.add_argument("--shape", type=float, default=1.0)
    p.add_argument("--n-min", type=int, default=None)
    p.add_argument("--n-max", type=int, default=50)
    p.set_defaults(func=cmd_alpha_star)

    fams = ("gamma-scale", "normal-variance", "normal-mean", "pareto", "uniform")
    p = sub.add_parser("length", parents=[common], help="mean length L_n per n")
    p.add_argument("--family", required=True, choices=fams)
    family_params(p)
    p.add_argument("--alpha", type=float, default=0.05)
    p.add_argument("--n-min", type=int, default=None)
    p.add_argument("--n-max", type=int, default=50)
    p.set_defaults(func=cmd_length)

    p = sub.add_parser("verify", parents=[common], help="run certification suites")
    p.add_argument("--suite", default="all", choices=tuple(verify.SUITES) + ("all",))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("simulate", parents=[common], help="Monte Carlo coverage and length")
    p.add_argument("--family", required=True, choices=fams)
    family_params(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=float, default=0.05)
    p.add_argument("--reps", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("nef", parents=[common], help="NEF interval mean length per n")
    p.add_argument("--generator", required=True, choices=tuple(nef.GENERATORS))
    p.add_argument("--theta", type=float, default=0.0)
    p.add_argument("--alpha", type=float, default=0.05)
    p.add_argument("--n-min", type=int, default=None)
    p.add_argument("--n-max", type=int, default=20)
    p.add_argument("--reps", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_nef)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad flags and 0 after --help
        return exc.code
    try:
        columns, rows, status = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print("monoci %s: error: %s" % (args.command, exc), file=sys.stderr)
        return 2
    except NumericFailure as exc:
        print("monoci %s: numerical failure: %s" % (args.command, exc), file=sys.stderr)
        return 1
    text = render(columns, rows, args.format)
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
