"""Command-line interface: ``heckemock <command> [options]``.

Exit status is 0 on success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction

import mpmath

from . import analytic, checks, roots
from .context import DEFAULT_CONTEXT, PrecisionContext
from .faber import divisor_polynomial, faber_psi
from .heckepoly import A_ZERO, hecke_poly_f
from .polynomial import Poly, format_poly
from .qseries import delta, eisenstein

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ----------------------------------------------------------------- formatting


def real_json(x, digits: int) -> dict:
    return {"value": mpmath.nstr(x, digits, strip_zeros=False), "digits": digits}


def err_str(x) -> str:
    return mpmath.nstr(x, 3)


def poly_json(p: Poly) -> list[str]:
    return [str(c) for c in p.coeffs]


def emit(args, text: str | None = None, payload=None, rows=None, header=None):
    out = io.StringIO()
    if args.format == "json":
        json.dump(payload, out, indent=2, sort_keys=False)
        out.write("\n")
    elif args.format == "csv" and rows is not None:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    else:
        out.write(text if text.endswith("\n") else text + "\n")
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out.getvalue())
    else:
        sys.stdout.write(out.getvalue())


def build_context(args) -> PrecisionContext:
    changes = {}
    if args.series_order is not None:
        changes["series_order"] = args.series_order
    if args.cmax is not None:
        changes["c_max"] = args.cmax
    if args.precision is not None:
        changes["work_precision"] = args.precision
    if args.tol is not None:
        changes["root_tol"] = Fraction(args.tol)
    try:
        return DEFAULT_CONTEXT.replace(**changes)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _need(cond: bool, msg: str):
    if not cond:
        raise UsageError(msg)


# ------------------------------------------------------------------ commands


def cmd_psi(args, ctx):
    _need(args.m >= 0, "m must be >= 0")
    p = faber_psi(args.m, ctx)
    emit(args, str(p), {"command": "psi", "m": args.m, "coefficients": poly_json(p)})
    return EXIT_OK


def split_form(F: Poly) -> str:
    G = roots.interior_factor(F)
    parts = ["x"]
    if G.degree > 0:
        parts.append(f"({G})")
    parts.append("(x - 1728)")
    return " * ".join(parts)


def cmd_fpoly(args, ctx):
    _need(args.m >= 2, "m must be >= 2")
    F = hecke_poly_f(args.m, ctx)
    text = split_form(F) if args.split_endpoints else str(F)
    payload = {"command": "fpoly", "m": args.m, "coefficients": poly_json(F), "text": text}
    if args.split_endpoints:
        payload["interior_coefficients"] = poly_json(roots.interior_factor(F))
    emit(args, text, payload)
    return EXIT_OK


def cmd_roots(args, ctx):
    _need(args.m >= 2, "m must be >= 2")
    t0 = time.perf_counter()
    recs = roots.hecke_roots(args.m, ctx)
    with ctx.workdps(10):
        rows = []
        for r in recs:
            u = roots.normalized_position(args.m, r.theta)
            rows.append(
                [
                    args.m,
                    "" if r.index is None else r.index,
                    mpmath.nstr(r.x_approx, 40, strip_zeros=False),
                    mpmath.nstr(r.theta, 40, strip_zeros=False),
                    f"{float(u):.17f}",
                ]
            )
    elapsed = time.perf_counter() - t0
    header = ["m", "l", "x", "theta", "u"]
    payload = {
        "command": "roots",
        "m": args.m,
        "roots": [
            {"l": row[1] if row[1] != "" else None, "x": {"value": row[2], "digits": 40},
             "theta": {"value": row[3], "digits": 40}, "u": {"value": row[4], "digits": 17}}
            for row in rows
        ],
    }
    text = "\n".join(f"{row[1]!s:>4}  x = {row[2]}  theta = {row[3]}" for row in rows)
    emit(args, text, payload, rows, header)
    print(f"{len(rows)} roots in {elapsed:.2f}s", file=sys.stderr)
    return EXIT_OK


def _series_payload(name: str, sv, ctx, extra=None):
    d = {
        "command": name,
        "value": real_json(sv.value, ctx.work_precision // 2),
        "tail_estimate": err_str(sv.tail_estimate),
        "c_used": sv.terms,
        "c_max": ctx.c_max,
    }
    d.update(extra or {})
    return d


def cmd_coeff(args, ctx):
    n = args.n
    _need(n >= -1, "n must be >= -1")
    if n == -1:
        v = analytic.FACT11
        emit(args, str(v), {"command": "coeff", "n": n, "exact": str(v)})
        return EXIT_OK
    if n == 0:
        emit(args, str(A_ZERO), {"command": "coeff", "n": 0, "exact": str(A_ZERO)})
        return EXIT_OK
    sv = analytic.a_delta(n, ctx)
    digits = ctx.work_precision // 2
    text = f"a_Delta({n}) = {mpmath.nstr(sv.value, digits)}  (tail {err_str(sv.tail_estimate)}, c <= {sv.terms}, cmax {ctx.c_max})"
    emit(args, text, _series_payload("coeff", sv, ctx, {"n": n}))
    return EXIT_OK


def cmd_beta(args, ctx):
    sv = analytic.beta_delta(ctx)
    digits = ctx.work_precision // 2
    text = f"beta_Delta = {mpmath.nstr(sv.value, digits)}  (tail {err_str(sv.tail_estimate)}, c <= {sv.terms}, cmax {ctx.c_max})"
    emit(args, text, _series_payload("beta", sv, ctx))
    return EXIT_OK


def cmd_bound_check(args, ctx):
    _need(args.m >= 3, "the f_m bound requires m >= 3")
    _need(args.grid >= 1, "grid must be positive")
    reps = analytic.check_f_bound(args.m, args.grid, ctx)
    rows = [
        [r.m, mpmath.nstr(r.theta, 20), mpmath.nstr(r.lhs, 15), r.budget, "pass" if r.passed else "fail",
         err_str(r.truncation_error)]
        for r in reps
    ]
    header = ["m", "theta", "lhs", "budget", "result", "truncation_error"]
    payload = {
        "command": "bound-check",
        "m": args.m,
        "reports": [
            {"theta": real_json(r.theta, 20), "lhs": real_json(r.lhs, 15), "budget": str(r.budget),
             "pass": r.passed, "tail_estimate": err_str(r.truncation_error)}
            for r in reps
        ],
    }
    text = "\n".join(f"theta = {row[1]}  lhs = {row[2]}  {row[4]}" for row in rows)
    emit(args, text, payload, rows, header)
    return EXIT_OK if all(r.passed for r in reps) else EXIT_FAIL


def cmd_equidist(args, ctx):
    _need(args.m >= 2, "m must be >= 2")
    rep = roots.equidistribution(args.m, ctx)
    rows = [[args.m, i + 1, f"{u:.15f}"] for i, u in enumerate(rep.normalized_positions)]
    payload = {
        "command": "equidist",
        "m": args.m,
        "star_discrepancy": f"{rep.star_discrepancy:.15f}",
        "positions": [f"{u:.15f}" for u in rep.normalized_positions],
        "x": [mpmath.nstr(x, 30) for x in rep.x_values],
        "theta": [mpmath.nstr(t, 30) for t in rep.thetas],
    }
    text = f"m = {args.m}: D* = {rep.star_discrepancy:.6f} (5/m = {5 / args.m:.6f})"
    emit(args, text, payload, rows, ["m", "i", "u"])
    return EXIT_OK


def cmd_divisor_poly(args, ctx):
    k = args.k
    _need(k >= 4 and k % 2 == 0, "k must be an even integer >= 4")
    N = max(ctx.series_order, k + 8)
    f = delta(N=N) if args.form == "delta" else eisenstein(k, N=N)
    if args.form == "delta":
        _need(k == 12, "the delta form has weight 12")
    p = divisor_polynomial(f, k, ctx)
    emit(args, format_poly(p.coeffs), {"command": "divisor-poly", "k": k, "form": args.form,
                                        "coefficients": poly_json(p)})
    return EXIT_OK


def cmd_verify(args, ctx):
    results = checks.run_suite(args.level, ctx)
    rows = [[r.number, r.name, "pass" if r.passed else "fail", r.detail] for r in results]
    payload = {
        "command": "verify",
        "level": args.level,
        "results": [{"number": r.number, "name": r.name, "pass": r.passed, "detail": r.detail} for r in results],
    }
    text = "\n".join(r.line() for r in results)
    failed = [r for r in results if not r.passed]
    text += f"\n{len(results) - len(failed)}/{len(results)} checks passed"
    emit(args, text, payload, rows, ["number", "name", "result", "detail"])
    for r in failed:
        print(f"FAILED: {r.name}: {r.detail}", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


# -------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("precision (defaults from PrecisionContext)")
    g.add_argument("--series-order", type=int, help=f"q-expansion order N (default {DEFAULT_CONTEXT.series_order})")
    g.add_argument("--cmax", type=int, help=f"largest modulus in Kloosterman sums (default {DEFAULT_CONTEXT.c_max})")
    g.add_argument("--precision", type=int, help=f"working decimal digits (default {DEFAULT_CONTEXT.work_precision})")
    g.add_argument("--tol", type=str, help="root refinement width, e.g. 1e-40 (default 1e-30)")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json", help="JSON output")
    fmt.add_argument("--csv", dest="format", action="store_const", const="csv", help="CSV output where tabular")
    common.add_argument("-o", "--output", help="write to this file instead of stdout")
    common.set_defaults(format="text")

    p = argparse.ArgumentParser(prog="heckemock", description="Hecke polynomials of the mock modular form M_Delta.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("psi", parents=[common], help="Faber polynomial psi_m")
    s.add_argument("m", type=int)
    s.set_defaults(func=cmd_psi)

    s = sub.add_parser("fpoly", parents=[common], help="Hecke polynomial F_m")
    s.add_argument("m", type=int)
    s.add_argument("--split-endpoints", action="store_true", help="print as x * (...) * (x - 1728)")
    s.set_defaults(func=cmd_fpoly)

    s = sub.add_parser("roots", parents=[common], help="zeros of F_m with angles and normalized positions")
    s.add_argument("m", type=int)
    s.set_defaults(func=cmd_roots)

    s = sub.add_parser("coeff", parents=[common], help="mock coefficient a_Delta(n)")
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_coeff)

    s = sub.add_parser("beta", parents=[common], help="beta_Delta")
    s.set_defaults(func=cmd_beta)

    s = sub.add_parser("bound-check", parents=[common], help="the f_m bound on a theta grid")
    s.add_argument("m", type=int)
    s.add_argument("--grid", type=int, default=50, help="grid points (default 50)")
    s.set_defaults(func=cmd_bound_check)

    s = sub.add_parser("equidist", parents=[common], help="star discrepancy of the zeros of F_m")
    s.add_argument("m", type=int)
    s.set_defaults(func=cmd_equidist)

    s = sub.add_parser("divisor-poly", parents=[common], help="divisor polynomial of E_k (or Delta)")
    s.add_argument("k", type=int)
    s.add_argument("--form", choices=["eisenstein", "delta"], default="eisenstein")
    s.set_defaults(func=cmd_divisor_poly)

    s = sub.add_parser("verify", parents=[common], help="run the verification suite")
    s.add_argument("--level", choices=["quick", "full"], default="quick")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        ctx = build_context(args)
        return args.func(args, ctx)
    except UsageError as exc:
        print(f"heckemock {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
