"""Command-line front end: verification campaigns, expansion tables,
convergence-strip scans, and fixture integrity checks.

Exit codes: 0 success, 1 tolerance failure, 2 configuration error.
Output formats: text (default), json (schema 1), csv (comma separator,
point decimal, no locale).  Reports echo the full configuration so
published residual tables can be reproduced byte for byte.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .arithmetic import default_tables
from .errors import ConvergenceError, FormatError, SummaError
from .expansions import (euler_circle, euler_maclaurin, euler_voronoi,
                         taylor_maclaurin)
from .fixtures import check_manifest, fixture_dir
from .fractional import get_test_function
from .rh import load_zeros, sinh_kernel_sides
from .summation import (circle_check, mobius_check, poisson_check,
                        voronoi_check)

SCHEMA_VERSION = 1

VERIFY_FORMULAS = ("poisson", "voronoi-cosine", "voronoi-bessel",
                   "circle-sine", "circle-j0", "mobius-poisson", "mobius-naive")
EXPAND_FORMULAS = ("taylor", "euler-maclaurin", "euler-voronoi", "euler-circle")


def _config_dict(args, command: str) -> dict:
    keep = ("formula", "function", "y", "t", "N", "K", "n_max", "tol",
            "output", "seed", "theta_min", "theta_max", "steps")
    cfg = {"command": command}
    for k in keep:
        if hasattr(args, k) and getattr(args, k) is not None:
            cfg[k] = getattr(args, k)
    return cfg


def _emit(payload: dict, fmt: str, out) -> None:
    out = out if out is not None else sys.stdout
    if fmt == "json":
        print(json.dumps({"schema": SCHEMA_VERSION, **payload}, sort_keys=True),
              file=out)
    elif fmt == "csv":
        rows = payload.get("rows")
        if rows:
            print(",".join(str(k) for k in rows[0].keys()), file=out)
            for r in rows:
                print(",".join(repr(v) if isinstance(v, float) else str(v)
                               for v in r.values()), file=out)
    else:
        for line in payload.get("text", []):
            print(line, file=out)


def cmd_verify(args, out=None) -> int:
    if args.formula not in VERIFY_FORMULAS:
        print(f"error: unknown formula {args.formula!r} "
              f"(choose from {', '.join(VERIFY_FORMULAS)})", file=sys.stderr)
        return 2
    try:
        F = get_test_function(args.function)
    except KeyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.y is None or args.y <= 0:
        print("error: verify needs --y > 0", file=sys.stderr)
        return 2

    tables = default_tables(args.table_limit)
    try:
        if args.formula == "poisson":
            rep = poisson_check(F, args.y)
        elif args.formula.startswith("voronoi"):
            rep = voronoi_check(F, args.y, n_max=args.n_max,
                                form=args.formula.split("-")[1], tables=tables)
        elif args.formula.startswith("circle"):
            rep = circle_check(F, args.y, n_max=args.n_max,
                               form=args.formula.split("-")[1], tables=tables)
        elif args.formula == "mobius-poisson":
            rep = mobius_check(F, args.y, tables=tables)
        else:
            rep = mobius_check(F, args.y, naive=True, tables=tables)
    except SummaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    ok = rep.residual <= args.tol + rep.lhs_tail_bound + rep.rhs_tail_bound
    cfg = _config_dict(args, "verify")
    payload = {
        "config": cfg,
        "report": rep.as_dict(),
        "pass": bool(ok),
        "text": [
            f"formula      : {rep.formula}",
            f"y            : {rep.y!r}",
            f"lhs          : {rep.lhs!r}",
            f"rhs          : {rep.rhs!r}",
            f"residual     : {rep.residual!r}",
            f"tail bounds  : lhs {rep.lhs_tail_bound!r}, rhs {rep.rhs_tail_bound!r}",
            f"terms used   : {rep.terms_used}",
            f"verdict      : {'PASS' if ok else 'FAIL'} (tol {args.tol!r})",
        ],
        "rows": [{**rep.as_dict(), "pass": bool(ok)}],
    }
    _emit(payload, args.output, out)
    return 0 if ok else 1


def cmd_expand(args, out=None) -> int:
    if args.formula not in EXPAND_FORMULAS:
        print(f"error: unknown formula {args.formula!r} "
              f"(choose from {', '.join(EXPAND_FORMULAS)})", file=sys.stderr)
        return 2
    try:
        F = get_test_function(args.function)
    except KeyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    t = args.t
    if t is None or t > 0:
        print("error: expand needs --t <= 0", file=sys.stderr)
        return 2
    try:
        if args.formula == "taylor":
            exp = taylor_maclaurin(F, t, args.N)
        elif args.formula == "euler-maclaurin":
            exp = euler_maclaurin(F, t, args.N)
        elif args.formula == "euler-voronoi":
            exp = euler_voronoi(F, t, args.N)
        else:
            exp = euler_circle(F, t)
    except (SummaError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    rows = []
    for (p, c), v in zip(exp.terms, exp.term_values()):
        rows.append({
            "power": p,
            "coefficient_re": float(np.real(c)),
            "coefficient_im": float(np.imag(c)),
            "value_re": float(np.real(v)),
            "value_im": float(np.imag(v)),
        })
    rem = exp.remainder_value if exp.remainder_value is not None else 0.0
    text = [f"asymptotic expansion: {args.formula}, F = {args.function}, t = {t!r}",
            f"{'power':>8} | {'coefficient':>24} | {'term value':>24}"]
    for r in rows:
        text.append(f"{str(r['power']):>8} | {r['coefficient_re']!r:>24} | "
                    f"{r['value_re']!r:>24}")
    text.append(f"remainder (Re s = {exp.remainder_abscissa!r}): "
                f"{float(np.real(rem))!r} + {float(np.imag(rem))!r} i")
    payload = {
        "config": _config_dict(args, "expand"),
        "terms": rows,
        "remainder": {"abscissa": exp.remainder_abscissa,
                      "re": float(np.real(rem)), "im": float(np.imag(rem)),
                      "tail_estimate": exp.remainder_tail},
        "regular_part": float(np.real(exp.regular_part())),
        "total": float(np.real(exp.total())),
        "text": text,
        "rows": rows,
    }
    _emit(payload, args.output, out)
    return 0


def cmd_scan(args, out=None) -> int:
    if args.steps is None or args.steps < 1 or args.theta_max < args.theta_min:
        print("error: scan needs a non-empty theta grid", file=sys.stderr)
        return 2
    try:
        zeros = load_zeros()
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    thetas = np.linspace(args.theta_min, args.theta_max, args.steps)
    rows = []
    text = ["theta,residual,divergent"]
    for th in thetas:
        try:
            zs, ss, *_ = sinh_kernel_sides(float(th), zeros, K=args.K)
            resid = abs(zs - ss)
            divergent = False
        except ConvergenceError:
            resid = float("nan")
            divergent = True
        rows.append({"theta": float(th), "residual": float(resid),
                     "divergent": divergent})
        text.append(f"{float(th)!r},{float(resid)!r},{divergent}")
    payload = {"config": _config_dict(args, "scan"), "rows": rows, "text": text}
    # scans are tabular by nature: the text format is the CSV itself
    _emit(payload, args.output if args.output != "text" else "csv", out)
    return 0


def cmd_fixtures_check(args, out=None) -> int:
    try:
        manifest = check_manifest()
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    payload = {
        "config": _config_dict(args, "fixtures-check"),
        "manifest": manifest,
        "text": [f"fixture directory: {fixture_dir()}",
                 f"generator version: {manifest.get('generator_version')}",
                 f"files verified   : {len(manifest.get('files', {}))}"],
        "rows": [{"file": k, "sha256": v}
                 for k, v in sorted(manifest.get("files", {}).items())],
    }
    _emit(payload, args.output, out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="summa",
        description="Verify paired summation formulae and their expansions.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--output", choices=("text", "json", "csv"), default="text")
        p.add_argument("--seed", type=int, default=0,
                       help="seed echoed into reports (randomised suites)")

    pv = sub.add_parser("verify", help="run a both-sides formula check")
    pv.add_argument("--formula", required=True)
    pv.add_argument("--function", default="gaussian")
    pv.add_argument("--y", type=float)
    pv.add_argument("--tol", type=float, default=1e-8)
    pv.add_argument("--n-max", dest="n_max", type=int, default=400)
    pv.add_argument("--table-limit", dest="table_limit", type=int, default=200_000)
    common(pv)

    pe = sub.add_parser("expand", help="print an asymptotic-expansion table")
    pe.add_argument("--formula", required=True)
    pe.add_argument("--function", default="gaussian")
    pe.add_argument("--t", type=float)
    pe.add_argument("--N", type=int, default=3)
    common(pe)

    ps = sub.add_parser("scan", help="sweep theta for the zero-sum identity")
    ps.add_argument("--theta-min", dest="theta_min", type=float, default=0.0)
    ps.add_argument("--theta-max", dest="theta_max", type=float, default=0.7)
    ps.add_argument("--steps", type=int, default=8)
    ps.add_argument("--K", type=int, default=25)
    common(ps)

    pf = sub.add_parser("fixtures-check", help="verify fixture checksums")
    common(pf)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "verify":
        return cmd_verify(args)
    if args.command == "expand":
        return cmd_expand(args)
    if args.command == "scan":
        return cmd_scan(args)
    return cmd_fixtures_check(args)


if __name__ == "__main__":
    raise SystemExit(main())
