"""Command-line front end: ``egfasym {exact,estimate,compare,fit-error,saddle}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

import mpmath

from egfasym.a000898 import A000898, closed_form_estimate
from egfasym.compare import (
    DEFAULT_MAX_N,
    DEFAULT_N_LIST,
    compare_rows,
    fit_error_order,
)
from egfasym.egf import exact_terms, parse_poly, render_int_scientific
from egfasym.errors import DomainError, EgfError, ParseError
from egfasym.numerics import PrecisionContext
from egfasym.saddle import a_of_r, b_of_r, hayman_coefficient_estimate, p_of_r, solve_saddle

ROW_FIELDS = ["n", "exact", "estimate", "ratio_minus_one", "scaled_error"]


def _n_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad n list: {text!r}") from None


def _emit(records: list[dict[str, str]], fields: list[str], fmt: str, out) -> None:
    if fmt == "json":
        json.dump(records, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        w = csv.DictWriter(out, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        w.writerows(records)
    else:
        for rec in records:
            out.write("\t".join(rec[f] for f in fields) + "\n")


def cmd_exact(args, out) -> None:
    poly = parse_poly(args.poly)
    if args.n is None or args.n < 0:
        raise DomainError("--n must be given and >= 0")
    seq = exact_terms(poly, args.n)
    records = []
    for n, t in enumerate(seq.terms):
        if args.digits and t > 0:
            s = render_int_scientific(t, args.digits)
        else:
            s = str(t)
        records.append({"n": str(n), "term": s})
    _emit(records, ["n", "term"], args.format, out)


def cmd_estimate(args, out) -> None:
    ctx = PrecisionContext(args.bits)
    poly = parse_poly(args.poly)
    ns = args.n_list or ([args.n] if args.n is not None else [])
    if not ns:
        raise DomainError("give --n or --n-list")
    if args.method != "hayman" and poly != A000898:
        raise DomainError("closed-form methods exist only for --poly 0,2,1")
    records = []
    for n in ns:
        if n > args.max_n:
            raise DomainError(f"n={n} exceeds the cap of {args.max_n}")
        if args.method == "hayman":
            v = hayman_coefficient_estimate(poly, n, ctx).ln_count
        else:
            v = closed_form_estimate(n, args.method == "closed", ctx).value
        records.append(
            {"n": str(n), "estimate": v.render(args.digits, ctx), "ln": mpmath.nstr(v.ln, 30)}
        )
    _emit(records, ["n", "estimate", "ln"], args.format, out)


def cmd_compare(args, out) -> None:
    ctx = PrecisionContext(args.bits)
    ns = args.n_list or list(DEFAULT_N_LIST)
    rows = compare_rows(ns, args.digits, ctx, args.max_n)
    _emit([r.as_strings() for r in rows], ROW_FIELDS, args.format, out)


def cmd_fit_error(args, out) -> None:
    ctx = PrecisionContext(args.bits)
    ns = args.n_list or [10**3, 10**4, 10**5]
    fit = fit_error_order(ns, ctx, args.max_n)
    rows = [r.as_strings() for r in fit.rows]
    if args.format == "json":
        json.dump(
            {"rows": rows, "slope": repr(fit.slope), "intercept": repr(fit.intercept)},
            out,
            indent=2,
        )
        out.write("\n")
        return
    _emit(rows, ROW_FIELDS, args.format, out)
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["slope", "intercept"])
        w.writerow([repr(fit.slope), repr(fit.intercept)])
    else:
        out.write(f"slope\t{fit.slope!r}\nintercept\t{fit.intercept!r}\n")


def cmd_saddle(args, out) -> None:
    ctx = PrecisionContext(args.bits)
    poly = parse_poly(args.poly)
    if args.n is None:
        raise DomainError("--n is required")
    sp = solve_saddle(poly, args.n, ctx)
    with ctx.workprec():
        fields = {
            "n": str(args.n),
            "r": mpmath.nstr(sp.r, args.digits),
            "residual": mpmath.nstr(a_of_r(poly, sp.r) - args.n, 5),
            "b": mpmath.nstr(b_of_r(poly, sp.r), args.digits),
            "ln_f": mpmath.nstr(p_of_r(poly, sp.r), args.digits),
        }
    if args.format == "lines":
        for k, v in fields.items():
            out.write(f"{k}\t{v}\n")
    else:
        _emit([fields], list(fields), args.format, out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="egfasym",
        description="Exact terms and saddle-point asymptotics of EGFs exp(P(z)).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, digits_default):
        p.add_argument("--format", choices=["lines", "csv", "json"], default="lines")
        p.add_argument("--bits", type=int, default=256, help="target precision in bits")
        p.add_argument("--digits", type=int, default=digits_default)
        p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help="largest n accepted")

    p = sub.add_parser("exact", help="exact terms I_0..I_N")
    p.add_argument("--poly", default="0,2,1", help="ascending coefficients, e.g. 0,2,1")
    p.add_argument("--n", type=int, help="last index N")
    common(p, None)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("estimate", help="asymptotic estimates of I_n")
    p.add_argument("--poly", default="0,2,1")
    p.add_argument("--n", type=int)
    p.add_argument("--n-list", type=_n_list)
    p.add_argument(
        "--method",
        choices=["hayman", "closed", "closed-uncorrected"],
        default="hayman",
    )
    common(p, 5)
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("compare", help="exact vs closed-form table for A000898")
    p.add_argument("--n-list", type=_n_list)
    common(p, 5)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("fit-error", help="fit the decay order of the closed-form error")
    p.add_argument("--n-list", type=_n_list)
    common(p, 5)
    p.set_defaults(func=cmd_fit_error)

    p = sub.add_parser("saddle", help="saddle point r_n with a(r) residual and b(r)")
    p.add_argument("--poly", default="0,2,1")
    p.add_argument("--n", type=int)
    common(p, 20)
    p.set_defaults(func=cmd_saddle)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    args = build_parser().parse_args(argv)
    out = out if out is not None else sys.stdout
    if args.digits is not None and args.digits < 1:
        print("error: --digits must be >= 1", file=sys.stderr)
        return 1
    buf = io.StringIO()
    try:
        PrecisionContext(args.bits)
        args.func(args, buf)
    except EgfError as exc:
        kind = "parse error" if isinstance(exc, ParseError) else "error"
        print(f"{kind}: {exc}", file=sys.stderr)
        return 1
    out.write(buf.getvalue())
    return 0


if __name__ == "__main__":
    sys.exit(main())
