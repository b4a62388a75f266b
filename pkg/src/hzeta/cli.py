"""Command-line interface: ``hzeta <subcommand> ...``.

Exit status is 2 for usage errors, 1 when a verification or scan fails and
0 otherwise.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys

from . import bernoulli as bn
from .conjectures import conjecture_scan
from .exact import Params, parse_rat
from .zeros import (
    ConvergenceError,
    FloatCfg,
    PrecisionError,
    ZeroListError,
    default_tail,
    zero_list,
    zeta_truncated,
)
from .zeta import zeta_closed_small, zeta_linear, zeta_table


def _pos_rat(text):
    try:
        x = parse_rat(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if x <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text}")
    return x


def _nonneg_int(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {text}")
    return n


def _pos_int(text):
    n = _nonneg_int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text}")
    return n


def _params(args) -> Params:
    return Params(args.a, args.b)


def _write_rows(out, header, rows, fmt):
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    else:
        width = max(len(str(r[0])) for r in rows) if rows else 1
        for idx, val in rows:
            out.write(f"{str(idx).rjust(width)}  {val}\n")


def cmd_zeta(args, out) -> int:
    table = zeta_table(_params(args), args.pmax, args.method)
    if args.format == "json":
        out.write(json.dumps(table.to_dict()) + "\n")
    else:
        _write_rows(out, ("p", "value"), table.to_csv_rows(), args.format)
    return 0


def cmd_bernoulli(args, out) -> int:
    table = bn.bern_numbers(_params(args), args.nmax)
    if args.format == "json":
        out.write(json.dumps(table.to_dict()) + "\n")
    else:
        _write_rows(out, ("n", "value"), [(n, str(x)) for n, x in enumerate(table.numbers)], args.format)
    return 0


def cmd_poly(args, out) -> int:
    params = _params(args)
    if args.family == "B":
        p = bn.bern_poly(params, args.n)
    else:
        p = bn.companion_poly(params, args.n)
    if args.format == "json":
        doc = {"a": str(params.a), "b": str(params.b), "family": args.family, "n": args.n,
               "coefficients": p.to_json()}
        out.write(json.dumps(doc) + "\n")
    elif args.format == "csv":
        _write_rows(out, ("degree", "coefficient"), list(enumerate(p.to_json())), "csv")
    else:
        out.write(str(p) + "\n")
    return 0


def _cfg(args) -> FloatCfg:
    kw = {}
    if args.precision_bits is not None:
        kw["precision_bits"] = args.precision_bits
    if getattr(args, "tol", None) is not None:
        kw["newton_tol"] = args.tol
    return FloatCfg.from_env(**kw)


def _digits(cfg: FloatCfg) -> int:
    return max(15, int(cfg.precision_bits * math.log10(2)) - 10)


def cmd_zeros(args, out) -> int:
    params = _params(args)
    cfg = _cfg(args)
    zs = zero_list(params, args.pairs, cfg)
    digits = _digits(cfg)
    doc = {
        "a": str(params.a),
        "b": str(params.b),
        "precision_bits": cfg.precision_bits,
        "digits": digits,
        "newton_tol": cfg.newton_tol,
        "zeros": [z.to_dict(digits) for z in zs],
    }
    if args.format == "json":
        out.write(json.dumps(doc) + "\n")
    else:
        rows = [(d["n"], d["re"], d["im"], d["residual"]) for d in doc["zeros"]]
        if args.format == "csv":
            w = csv.writer(out, lineterminator="\n")
            w.writerow(("n", "re", "im", "residual"))
            w.writerows(rows)
        else:
            for n, re, im, res in rows:
                out.write(f"{n:>4}  {re}  {im}  residual {res}\n")
    return 0


def cmd_zeta_num(args, out) -> int:
    params = _params(args)
    cfg = _cfg(args)
    tail = args.tail if args.tail is not None else default_tail(args.pairs)
    est = zeta_truncated(params, args.s, args.pairs, tail, cfg)
    exact = zeta_linear(params, args.s)[args.s]
    doc = {"a": str(params.a), "b": str(params.b), "precision_bits": cfg.precision_bits}
    doc.update(est.to_dict())
    doc["exact"] = str(exact)
    doc["error"] = repr(abs(est.value - float(exact)))
    out.write(json.dumps(doc) + "\n")
    return 0


def cmd_conjecture(args, out) -> int:
    report = conjecture_scan(args.bmax, args.nmax, alpha_nmax=args.alpha_nmax)
    out.write(report.to_json() + "\n")
    return 0 if report.ok else 1


def verification_battery(params: Params, pmax: int) -> list[tuple[str, bool, str]]:
    """Every exact cross-check available for ``params`` up to ``pmax``.

    Returns (name, passed, detail) rows; a skipped check is reported as passed
    with detail "skipped".
    """
    rows = []

    def add(name, ok, detail=""):
        rows.append((name, bool(ok), detail))

    lin = zeta_linear(params, pmax)
    for method in ("quadratic", "series", "bernoulli"):
        other = zeta_table(params, pmax, method)
        add(f"zeta linear = {method}", lin.same_values(other))
    small = zeta_closed_small(params)
    add("zeta closed forms p=2..4", all(lin[p] == small[p - 2] for p in range(2, min(pmax, 4) + 1)))
    for name, rep in (
        ("zeta-bernoulli recurrence", bn.zeta_from_bernoulli_check(params, pmax, zeta=lin)),
        ("change of basis", bn.change_of_basis_check(params, pmax)),
        ("reflection symmetry", bn.symmetry_check(params, pmax)),
        ("conjugate recurrences", bn.conjugate_recurrence_check(params, pmax)),
        ("conjugacy", bn.conjugacy_check(params, pmax)),
        ("Appell property", bn.appell_check(params, pmax)),
        ("cumulants", bn.cumulant_check(params, pmax, zeta=lin)),
    ):
        add(name, rep.ok, "" if rep.ok else f"failed at {rep.failures}")
    if params.a == 1 and params.b.denominator == 1:
        b = int(params.b)
        add("difference recursion", bn.dilcher_check(b, pmax).ok)
        add("Bernoulli-zeta relation", bn.bern_zeta_relation_check(b, pmax).ok)
        add("Howard recurrence", bn.bern_howard(b, pmax).numbers == bn.bern_numbers(params, pmax).numbers)
    else:
        for name in ("difference recursion", "Bernoulli-zeta relation", "Howard recurrence"):
            add(name, True, "skipped (needs a = 1, integer b)")
    return rows


def cmd_verify(args, out) -> int:
    params = _params(args)
    rows = verification_battery(params, args.pmax)
    width = max(len(r[0]) for r in rows)
    out.write(f"verify a={params.a} b={params.b} pmax={args.pmax}\n")
    for name, ok, detail in rows:
        out.write(f"{name.ljust(width)}  {'PASS' if ok else 'FAIL'}{'  ' + detail if detail else ''}\n")
    failed = sum(not ok for _, ok, _ in rows)
    out.write(f"{len(rows) - failed}/{len(rows)} checks passed\n")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hzeta", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def ab(p):
        p.add_argument("--a", type=_pos_rat, required=True, help="positive rational, p or p/q")
        p.add_argument("--b", type=_pos_rat, required=True, help="positive rational, p or p/q")

    def fmt(p, default="json"):
        p.add_argument("--format", choices=("json", "csv", "plain"), default=default)

    def prec(p):
        p.add_argument("--precision-bits", type=int, default=None,
                       help="working precision (default 256, or HZETA_PRECISION_BITS)")

    p = sub.add_parser("zeta", help="exact zeta^H_{a,b}(p) table")
    ab(p)
    p.add_argument("--pmax", type=_nonneg_int, required=True)
    p.add_argument("--method", choices=("linear", "quadratic", "series", "bernoulli"), default="linear")
    fmt(p)
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("bernoulli", help="hypergeometric Bernoulli numbers")
    ab(p)
    p.add_argument("--nmax", type=_nonneg_int, required=True)
    fmt(p)
    p.set_defaults(func=cmd_bernoulli)

    p = sub.add_parser("poly", help="Bernoulli (B) or companion (C) polynomial")
    ab(p)
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--family", choices=("B", "C"), default="B")
    fmt(p)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("zeros", help="complex zeros of Phi_{a,b}")
    ab(p)
    p.add_argument("--pairs", type=_pos_int, required=True, help="number of conjugate pairs")
    prec(p)
    p.add_argument("--tol", type=float, default=None, help="Newton residual tolerance")
    fmt(p)
    p.set_defaults(func=cmd_zeros)

    p = sub.add_parser("zeta-num", help="numerical zeta from refined zeros plus asymptotic tail")
    ab(p)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--pairs", type=_pos_int, default=100)
    p.add_argument("--tail", type=_pos_int, default=None, help="last seed index summed (default max(1e4, 200*pairs))")
    prec(p)
    p.set_defaults(func=cmd_zeta_num)

    p = sub.add_parser("conjecture", help="scan the denominator conjectures")
    p.add_argument("--bmax", type=_pos_int, required=True)
    p.add_argument("--nmax", type=_nonneg_int, required=True)
    p.add_argument("--alpha-nmax", type=_pos_int, default=None,
                   help="cap for the odd-run search (default 4b+64 per b)")
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("verify", help="run every exact cross-check")
    ab(p)
    p.add_argument("--pmax", type=_nonneg_int, required=True)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "pmax", 2) < 2 and args.command in ("zeta", "verify"):
        parser.error("--pmax must be at least 2")
    if args.command == "zeta-num" and args.s < 2:
        parser.error("--s must be at least 2")
    if getattr(args, "precision_bits", None) is not None and args.precision_bits < 53:
        parser.error("--precision-bits must be at least 53")
    try:
        return args.func(args, out)
    except (ZeroListError, ConvergenceError, PrecisionError) as exc:
        print(f"hzeta: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
