"""Command-line interface.

Subcommands: eval-ml, eval-fhp, eval-mlp, solve, verify, table.  Numeric
output carries 15 significant digits and identical argv (including --seed)
produces byte-identical output.  Exit codes: 0 success, 1 usage/validation
error, 2 numerical failure (non-convergence or a failed verification).
"""

import argparse
import json
import os
import sys

import numpy as np

from . import config
from .errors import ConvergenceError, DomainError, MLPolyError
from .fokker_planck import (
    DiffusionProblem,
    MonomialInitial,
    SeriesInitial,
    SolutionProfile,
    solve_case_i,
    solve_case_ii,
    solve_laguerre_monomial,
    solve_laguerre_wright,
    solve_tf_diffusion,
)
from .fractional_hermite import fhp_coeffs, fhp_eval
from .mittag_leffler import ml_one, ml_three, ml_two
from .ml_polynomials import mlp_coeffs, mlp_eval
from .verify import SUITE_NAMES, format_report, run_suites

CONFIG_ENV_VAR = "MLPOLY_CONFIG"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on usage errors; the contract here is 1
    def error(self, message):
        raise _UsageError(message)


def _fmt(value):
    return format(float(value), ".15g")


def _json_ready(obj):
    if isinstance(obj, float):
        return float(_fmt(obj))
    if isinstance(obj, dict):
        return {k: _json_ready(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_ready(v) for v in obj]
    return obj


def _emit(text, output):
    if output:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _record_text(command, params, data, fmt):
    if fmt == "json":
        payload = {"meta": {"command": command, "params": params}, "data": data}
        return json.dumps(_json_ready(payload), sort_keys=True) + "\n"
    header = ",".join(data.keys())
    row = ",".join(_fmt(v) if isinstance(v, float) else str(v) for v in data.values())
    return f"{header}\n{row}\n"


def _profile_text(profile, fmt):
    if fmt == "json":
        return json.dumps(_json_ready(profile.to_json_obj()), sort_keys=True) + "\n"
    return profile.to_csv()


def _build_parser():
    parser = _Parser(prog="mlpoly", description=__doc__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key = value configuration file")
    common.add_argument("--output", help="write to this path instead of stdout")
    common.add_argument("--format", choices=("csv", "json"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval-ml", parents=[common],
                       help="evaluate a Mittag-Leffler function")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--z", type=float, required=True)
    p.add_argument("--beta", type=float, default=None)
    p.add_argument("--gamma", type=float, default=None)
    p.add_argument("--tol", type=float, default=None,
                   help="series tolerance (overrides the config file)")
    p.add_argument("--term-budget", type=int, default=None,
                   help="series term budget (overrides the config file)")

    p = sub.add_parser("eval-fhp", parents=[common],
                       help="evaluate a fractional Hermite polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--x", type=float, default=None)
    p.add_argument("--y", type=float, required=True)
    p.add_argument("--coeffs", action="store_true",
                   help="emit the coefficient list instead of a point value")

    p = sub.add_parser("eval-mlp", parents=[common],
                       help="evaluate a Mittag-Leffler polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--y", type=float, default=None)
    p.add_argument("--coeffs", action="store_true",
                   help="emit the coefficient list (in y) instead of a point value")

    p = sub.add_parser("solve", parents=[common],
                       help="solve a Cauchy problem onto a grid")
    p.add_argument("--problem", required=True,
                   choices=("tf-diffusion", "case-i", "case-ii",
                            "laguerre-monomial", "laguerre-wright"))
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--a", type=float, default=None)
    p.add_argument("--k", type=float, default=1.0)
    p.add_argument("--b", type=float, default=1.0)
    p.add_argument("--y-param", type=float, default=None)
    p.add_argument("--coeffs", default=None,
                   help="comma-separated series coefficients c0,c1,...")
    p.add_argument("--grid-var", choices=("x", "t"), default="x")
    p.add_argument("--grid-min", type=float, required=True)
    p.add_argument("--grid-max", type=float, required=True)
    p.add_argument("--grid-points", type=int, default=101)
    p.add_argument("--x", type=float, default=None, help="fixed x when grid-var is t")
    p.add_argument("--t", type=float, default=None, help="fixed t when grid-var is x")

    p = sub.add_parser("verify", parents=[common],
                       help="run the identity-verification suites")
    p.add_argument("--suite", default="all",
                   choices=SUITE_NAMES + ("identities", "all"))
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--seed", type=int, default=42)

    p = sub.add_parser("table", parents=[common],
                       help="emit low-order polynomial coefficient tables as CSV")
    p.add_argument("--family", required=True, choices=("fhp", "mlp"))
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, default=1.0)
    p.add_argument("--x", type=float, default=1.0, help="parameter of the mlp family")
    p.add_argument("--y", type=float, default=1.0, help="parameter of the fhp family")
    return parser


def _cmd_eval_ml(args):
    overrides = {}
    if args.tol is not None:
        overrides["series_tol"] = args.tol
    if args.term_budget is not None:
        overrides["term_budget"] = args.term_budget
    if overrides:
        config.configure(**overrides)
    if args.gamma is not None:
        beta = 1.0 if args.beta is None else args.beta
        result = ml_three(args.alpha, beta, args.gamma, args.z)
    elif args.beta is not None:
        result = ml_two(args.alpha, args.beta, args.z)
    else:
        result = ml_one(args.alpha, args.z)
    params = {"alpha": args.alpha, "z": args.z}
    if args.beta is not None:
        params["beta"] = args.beta
    if args.gamma is not None:
        params["gamma"] = args.gamma
    data = {
        "value": result.value,
        "abs_error_estimate": result.abs_error_estimate,
        "terms_used": result.terms_used,
    }
    return _record_text("eval-ml", params, data, args.format)


def _poly_text(command, params, poly, fmt):
    if fmt == "json":
        payload = {"meta": {"command": command, "params": params},
                   "data": {"coefficients": poly.to_json_obj()}}
        return json.dumps(_json_ready(payload), sort_keys=True) + "\n"
    lines = ["exponent,coefficient"]
    for coeff, exponent in poly.terms:
        lines.append(f"{_fmt(exponent)},{_fmt(coeff)}")
    return "\n".join(lines) + "\n"


def _cmd_eval_fhp(args):
    params = {"n": args.n, "alpha": args.alpha, "y": args.y}
    if args.coeffs:
        return _poly_text("eval-fhp", params, fhp_coeffs(args.n, args.alpha, args.y),
                          args.format)
    if args.x is None:
        raise _UsageError("--x is required unless --coeffs is given")
    params["x"] = args.x
    value = fhp_eval(args.n, args.alpha, args.x, args.y)
    return _record_text("eval-fhp", params, {"value": value}, args.format)


def _cmd_eval_mlp(args):
    params = {"n": args.n, "alpha": args.alpha, "beta": args.beta, "x": args.x}
    if args.coeffs:
        return _poly_text("eval-mlp", params,
                          mlp_coeffs(args.n, args.alpha, args.beta, args.x), args.format)
    if args.y is None:
        raise _UsageError("--y is required unless --coeffs is given")
    params["y"] = args.y
    value = mlp_eval(args.n, args.alpha, args.beta, args.x, args.y)
    return _record_text("eval-mlp", params, {"value": value}, args.format)


def _require(args, flag):
    value = getattr(args, flag.replace("-", "_"))
    if value is None:
        raise _UsageError(f"--{flag} is required for --problem {args.problem}")
    return value


def _cmd_solve(args):
    if args.grid_points < 2:
        raise _UsageError("--grid-points must be at least 2")
    if args.grid_max <= args.grid_min:
        raise _UsageError("--grid-max must exceed --grid-min")
    grid = np.linspace(args.grid_min, args.grid_max, args.grid_points)

    def point(x, t):
        if args.problem == "tf-diffusion":
            if args.coeffs is not None:
                initial = SeriesInitial(tuple(float(c) for c in args.coeffs.split(",")))
            else:
                initial = MonomialInitial(_require(args, "n"))
            prob = DiffusionProblem(args.alpha, args.k, initial)
            return solve_tf_diffusion(prob, x, t)
        if args.problem == "case-i":
            return solve_case_i(_require(args, "n"), _require(args, "a"),
                                args.alpha, args.k, x, t)
        if args.problem == "case-ii":
            return solve_case_ii(_require(args, "n"), _require(args, "a"),
                                 args.alpha, args.k, x, t)
        beta = _require(args, "beta")
        if args.problem == "laguerre-monomial":
            return solve_laguerre_monomial(_require(args, "n"), args.alpha,
                                           beta, args.b, x, t)
        return solve_laguerre_wright(_require(args, "y-param"), args.alpha,
                                     beta, args.b, x, t)

    if args.grid_var == "x":
        t = _require(args, "t")
        values = [point(float(g), t) for g in grid]
        fixed = {"t": t}
    else:
        x = _require(args, "x")
        values = [point(x, float(g)) for g in grid]
        fixed = {"x": x}

    meta = {"problem": args.problem, "grid_var": args.grid_var,
            "alpha": args.alpha, **fixed}
    for key in ("n", "a", "beta", "b", "k", "y_param", "coeffs"):
        value = getattr(args, key, None)
        if value is not None:
            meta[key] = value
    profile = SolutionProfile(tuple(float(g) for g in grid), tuple(values), meta)
    return _profile_text(profile, args.format)


def _cmd_verify(args):
    results = run_suites(args.suite, n_max=args.n_max, seed=args.seed)
    report, ok = format_report(results, n_max=args.n_max, seed=args.seed)
    return report, ok


def _cmd_table(args):
    lines = ["n,exponent,coefficient"]
    for n in range(args.n_max + 1):
        if args.family == "fhp":
            poly = fhp_coeffs(n, args.alpha, args.y)
        else:
            poly = mlp_coeffs(n, args.alpha, args.beta, args.x)
        for coeff, exponent in poly.terms:
            lines.append(f"{n},{_fmt(exponent)},{_fmt(coeff)}")
    return "\n".join(lines) + "\n"


def run(argv=None):
    """Execute one command; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        config_path = args.config or os.environ.get(CONFIG_ENV_VAR)
        if config_path and os.path.exists(config_path):
            config.load_config_file(config_path)
        if args.command == "eval-ml":
            text = _cmd_eval_ml(args)
        elif args.command == "eval-fhp":
            text = _cmd_eval_fhp(args)
        elif args.command == "eval-mlp":
            text = _cmd_eval_mlp(args)
        elif args.command == "solve":
            text = _cmd_solve(args)
        elif args.command == "table":
            text = _cmd_table(args)
        else:
            text, ok = _cmd_verify(args)
            _emit(text, args.output)
            return 0 if ok else 2
        _emit(text, args.output)
        return 0
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ConvergenceError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        if exc.partial is not None:
            print(f"partial_value = {_fmt(exc.partial)}", file=sys.stderr)
        if exc.error_estimate is not None:
            print(f"abs_error_estimate = {_fmt(exc.error_estimate)}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except MLPolyError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
