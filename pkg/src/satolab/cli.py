"""Command line: ``satolab <command> [flags]``.

Intervals are given in radians (pi = 3.14159265358979).  Exit status is 0 on
success, 1 when a verification command finds a mismatch and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

from . import beurling, classnumber, curves, modforms, satotate, traceformula
from .emit import emit
from .ff import FieldError, field_for_q, make_field

THREADS_ENV = "SATOLAB_THREADS"

SCHEMAS = {
    "count": ("q", "alpha", "beta", "N_I"),
    "histogram": ("q", "t", "count"),
    "classnum": ("N", "twelve_H", "form_count"),
    "trace-es": ("k", "q", "square_term", "elliptic_term", "divisor_term", "total"),
    "trace-mf": ("k", "n", "trace"),
    "verify-es": ("k", "q", "es_total", "mf_total", "match"),
    "verify-deuring": ("q", "t", "count", "expected", "status"),
    "bs-coeffs": ("m", "re", "im"),
    "discrepancy": satotate.DiscrepancyRow.FIELDS,
    "exponent-fit": ("alpha", "beta", "slope", "points"),
    "sandwich": ("q", "alpha", "beta", "M", "lower", "N_I", "upper", "enclosed"),
    "moments": ("q", "R", "value", "ratio"),
}

HELP = {
    "count": "number of nonsingular (a,b) with angle in the closed interval",
    "histogram": "exact trace histogram",
    "classnum": "Hurwitz class number as 12*H(N)",
    "trace-es": "Eichler-Selberg closed form for Tr T_k(q)",
    "trace-mf": "Tr T_n on S_k from q-expansions",
    "verify-es": "closed form vs q-expansion traces; exit 1 on mismatch",
    "verify-deuring": "trace counts vs (q-1)H(4q-t^2) weighting; exit 1 on mismatch",
    "bs-coeffs": "Fourier coefficients of a Beurling-Selberg polynomial",
    "discrepancy": "N_I - mu_ST(I) q^2 over a uniform half-open grid or one interval",
    "exponent-fit": "fitted growth exponent of |N_I - mu_ST(I) q^2| over q",
    "sandwich": "Beurling-Selberg lower/upper bounds around N_I",
    "moments": "sum over all (a,b) of (sum_x chi(x^3+ax+b))^(2R)",
}


def _default_threads():
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="satolab", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--output", default=None, help="output path (default stdout)")
    common.add_argument("--threads", type=int, default=_default_threads(),
                        help=f"worker threads (default ${THREADS_ENV} or 1)")

    field = argparse.ArgumentParser(add_help=False)
    field.add_argument("--p", type=int)
    field.add_argument("--r", type=int, default=None)
    field.add_argument("--q", type=int)
    field.add_argument("--mode", choices=("brute", "orbit"), default=None)

    interval = argparse.ArgumentParser(add_help=False)
    interval.add_argument("--interval", type=float, nargs=2, metavar=("ALPHA", "BETA"),
                          default=(0.0, math.pi))

    def add(name, *parents):
        epilog = "columns: " + ",".join(SCHEMAS[name])
        return sub.add_parser(name, parents=[common, *parents], help=HELP[name],
                              description=HELP[name], epilog=epilog)

    add("count", field, interval)
    add("histogram", field)
    add("classnum").add_argument("--n", type=int, required=True)
    p = add("trace-es")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p = add("trace-mf")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p = add("verify-es")
    p.add_argument("--kmin", type=int, default=4)
    p.add_argument("--kmax", type=int, default=30)
    p.add_argument("--qmax", type=int, default=49)
    p = add("verify-deuring", field)
    p.add_argument("--convention", choices=sorted(curves.CONVENTIONS), default="aut")
    p = add("bs-coeffs")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--sign", choices=("majorant", "minorant"), default="majorant")
    for name in ("discrepancy", "exponent-fit"):
        p = add(name)
        p.add_argument("--q", type=int, nargs="+", required=True)
        p.add_argument("--cells", type=int, default=None, help="uniform grid size")
        p.add_argument("--interval", type=float, nargs=2, metavar=("ALPHA", "BETA"), default=None)
        p.add_argument("--mode", choices=("brute", "orbit"), default=None)
    p = add("sandwich", field, interval)
    p.add_argument("--M", type=int, default=None, help="degree (default floor(q^(1/4)))")
    p = add("moments", field)
    p.add_argument("--R", type=int, required=True)
    return parser


def _field(parser, args):
    try:
        if args.p is not None:
            r = 1 if args.r is None else args.r
            ctx = make_field(args.p, r)
            if args.q is not None and args.q != ctx.q:
                parser.error(f"--q {args.q} is not --p {args.p} ** --r {r}")
            return ctx
        if args.q is None:
            parser.error("give --p (and --r) or --q")
        if args.r is not None:
            ctx = field_for_q(args.q)
            if ctx.r != args.r:
                parser.error(f"--q {args.q} is not a {args.r}-th power of a prime")
            return ctx
        return field_for_q(args.q)
    except FieldError as exc:
        parser.error(str(exc))


def _interval(parser, pair, closed_right=True):
    try:
        return satotate.AngleInterval(pair[0], pair[1], closed_right)
    except ValueError as exc:
        parser.error(str(exc))


def _grid(parser, args):
    if args.interval is not None and args.cells is not None:
        parser.error("give --cells or --interval, not both")
    if args.interval is not None:
        return [_interval(parser, args.interval)]
    return satotate.uniform_grid(args.cells or 16)


def dispatch(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cmd = args.command
    status = 0
    rows: list[dict]

    if cmd in ("count", "histogram", "verify-deuring", "sandwich", "moments"):
        ctx = _field(parser, args)
        hist = curves.trace_histogram(ctx, args.mode, threads=args.threads)

    if cmd == "count":
        I = _interval(parser, args.interval)
        rows = [{"q": ctx.q, "alpha": I.alpha, "beta": I.beta,
                 "N_I": satotate.count_NI(ctx, I, hist=hist)}]
    elif cmd == "histogram":
        rows = hist.rows()
    elif cmd == "classnum":
        if args.n < 0:
            parser.error("--n must be >= 0")
        h = classnumber.hurwitz(args.n)
        rows = [{"N": h.N, "twelve_H": h.twelve_H, "form_count": h.form_count}]
    elif cmd == "trace-es":
        try:
            b = traceformula.trace_tk_es(args.k, args.q)
        except ValueError as exc:
            parser.error(str(exc))
        rows = [{"k": b.k, "q": b.q, "square_term": b.square_term, "elliptic_term": b.elliptic_term,
                 "divisor_term": b.divisor_term, "total": b.total}]
    elif cmd == "trace-mf":
        try:
            rows = [{"k": args.k, "n": args.n, "trace": modforms.trace_tk_mf(args.k, args.n)}]
        except ValueError as exc:
            parser.error(str(exc))
    elif cmd == "verify-es":
        checks = traceformula.verify_es(args.kmax, args.qmax, args.kmin)
        rows = [{"k": c.k, "q": c.q, "es_total": c.es_total, "mf_total": c.mf_total, "match": c.match}
                for c in checks]
        status = 0 if all(c.match for c in checks) else 1
    elif cmd == "verify-deuring":
        report = curves.verify_deuring(ctx, hist, convention=args.convention)
        rows = report.table()
        status = 0 if report.ok else 1
    elif cmd == "bs-coeffs":
        try:
            J = beurling.IntervalJ(args.alpha, args.beta)
            S = beurling.selberg(J, args.M, args.sign)
        except ValueError as exc:
            parser.error(str(exc))
        rows = [{"m": int(m), "re": S[int(m)].real, "im": S[int(m)].imag} for m in S.frequencies]
    elif cmd == "discrepancy":
        grid = _grid(parser, args)
        rows = [r.as_dict() for r in satotate.discrepancy_table(args.q, grid, args.mode)]
    elif cmd == "exponent-fit":
        grid = _grid(parser, args)
        rows = []
        for I in grid:
            try:
                slope = satotate.exponent_fit(args.q, I, args.mode)
            except ValueError:
                slope = float("nan")
            rows.append({"alpha": I.alpha, "beta": I.beta, "slope": slope, "points": len(set(args.q))})
    elif cmd == "sandwich":
        I = _interval(parser, args.interval)
        s = satotate.sandwich(ctx, I, args.M, hist=hist)
        n = satotate.count_NI(ctx, I, hist=hist)
        rows = [{"q": ctx.q, "alpha": I.alpha, "beta": I.beta, "M": s.M, "lower": s.lower,
                 "N_I": n, "upper": s.upper, "enclosed": s.lower <= n <= s.upper}]
        status = 0 if s.lower <= n <= s.upper else 1
    elif cmd == "moments":
        value, ratio = satotate.moment_sum(ctx, args.R, hist=hist)
        rows = [{"q": ctx.q, "R": args.R, "value": value, "ratio": ratio}]
    else:  # pragma: no cover - argparse restricts choices
        parser.error(f"unknown command {cmd}")

    try:
        emit(rows, SCHEMAS[cmd], args.format, args.output)
    except OSError as exc:
        print(f"satolab: cannot write output: {exc}", file=sys.stderr)
        return 2
    return status


def main():
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
