"""Command-line front end.

Subcommands::

    daehee table daehee --n-max 10 --format csv
    daehee eval bernoulli-higher --n 4 --alpha 6 --x 1/2
    daehee verify --ids all --n-max 12 --x=0,1,-1,1/2,-3/7 --format json
    daehee volkenborn first --n 2 --p 3 --levels 1..8

Data goes to stdout and diagnostics to stderr.  Exit codes: 0 success,
1 an identity failed, 2 usage error, 3 term budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from . import identities, padic, sequences
from .errors import BudgetExceededError, DaeheeError, ParseError, UnknownIdentityError
from .numerics import format_rational, parse_rational

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

TABLE_MAX = 200
PRIMES = (2, 3, 5, 7, 11, 13)

SEQUENCES = ("daehee", "daehee2", "bernoulli", "stirling1", "stirling2")
POLYNOMIALS = ("daehee-poly", "daehee2-poly", "bernoulli-poly", "bernoulli-higher")
KINDS = {
    "first": padic.IntegrandKind.FALLING,
    "second": padic.IntegrandKind.NEG_FALLING,
    "monomial": padic.IntegrandKind.MONOMIAL,
}


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _rational_arg(text: str):
    try:
        return parse_rational(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rational_list_arg(text: str):
    if text == "":
        return []
    return [_rational_arg(part) for part in text.split(",")]


def _nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {text!r}")
    return v


def _levels_arg(text: str):
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"levels must look like A..B, got {text!r}") from None
    if a < 0 or b < a:
        raise argparse.ArgumentTypeError(f"need 0 <= A <= B in {text!r}")
    return range(a, b + 1)


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    fmt.add_argument("--trunc", type=_nonneg_int, default=None,
                     help="truncation order override (default: max(n_max + 2, 32))")

    parser = argparse.ArgumentParser(
        prog="daehee",
        description="Exact Daehee, Bernoulli and Stirling tables, identity checks "
                    "and Volkenborn convergence reports.",
        epilog="Negative rationals must be attached with '=', e.g. --x=-3/7.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[fmt], help="print a sequence or triangle")
    p.add_argument("seq", choices=SEQUENCES)
    p.add_argument("--n-max", type=_nonneg_int, required=True)

    p = sub.add_parser("eval", parents=[fmt], help="evaluate a polynomial at a rational point")
    p.add_argument("seq", choices=POLYNOMIALS)
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--x", type=_rational_arg, required=True)
    p.add_argument("--alpha", type=int, default=None)

    p = sub.add_parser("verify", parents=[fmt], help="check catalog identities")
    p.add_argument("--ids", default="all",
                   help="comma-separated ids or 'all'; valid: " + ", ".join(identities.catalog_ids()))
    p.add_argument("--n-max", type=_nonneg_int, default=12)
    p.add_argument("--x", type=_rational_list_arg, default=[],
                   help="comma-separated sample points (default: 0 only)")

    p = sub.add_parser("volkenborn", parents=[fmt], help="Volkenborn partial sums per level")
    p.add_argument("kind", choices=tuple(KINDS))
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--x", type=_rational_arg, default=parse_rational("0"))
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--levels", type=_levels_arg, required=True)
    return parser


# -- rendering ---------------------------------------------------------------

def _render_table(args) -> List[str]:
    if args.seq in ("stirling1", "stirling2"):
        tri = (sequences.stirling1 if args.seq == "stirling1" else sequences.stirling2)(args.n_max)
        rows = [[format_rational(v) for v in tri.row(n)] for n in range(tri.n_max + 1)]
        if args.format == "json":
            return [_dumps([{"n": n, "row": r} for n, r in enumerate(rows)])]
        if args.format == "csv":
            return [f"{n}:" + ",".join(r) for n, r in enumerate(rows)]
        return [f"{n}: " + " ".join(r) for n, r in enumerate(rows)]

    build = {
        "daehee": sequences.daehee_numbers,
        "daehee2": sequences.daehee2_numbers,
        "bernoulli": sequences.bernoulli_numbers,
    }[args.seq]
    values = [format_rational(v) for v in build(args.n_max)]
    if args.format == "json":
        return [_dumps([{"n": n, "value": v} for n, v in enumerate(values)])]
    if args.format == "csv":
        return ["n,value"] + [f"{n},{v}" for n, v in enumerate(values)]
    return [f"{n} {v}" for n, v in enumerate(values)]


def _render_eval(args, parser) -> List[str]:
    if args.seq == "bernoulli-higher":
        if args.alpha is None:
            parser.error("eval bernoulli-higher requires --alpha")
        value = sequences.bernoulli_higher(args.n, args.alpha, args.x, args.trunc)
    else:
        if args.alpha is not None:
            parser.error(f"--alpha only applies to bernoulli-higher, not {args.seq}")
        if args.seq == "daehee-poly":
            value = sequences.daehee_poly(args.n, args.x, args.trunc)
        elif args.seq == "daehee2-poly":
            value = sequences.daehee2_poly(args.n, args.x, args.trunc)
        else:
            value = sequences.bernoulli_poly(args.n, args.x)
    x, v = format_rational(args.x), format_rational(value)
    if args.format == "json":
        obj = {"seq": args.seq, "n": args.n}
        if args.alpha is not None:
            obj["alpha"] = args.alpha
        obj.update(x=x, value=v)
        return [_dumps(obj)]
    if args.format == "csv":
        if args.alpha is not None:
            return ["n,alpha,x,value", f"{args.n},{args.alpha},{x},{v}"]
        return ["n,x,value", f"{args.n},{x},{v}"]
    return [v]


def _render_checks(checks, fmt: str) -> List[str]:
    if fmt == "json":
        return [_dumps([c.to_dict() for c in checks])]
    if fmt == "csv":
        lines = ["id,status,instances,failed"]
        lines += [f"{c.id},{c.status},{len(c.instances)},{len(c.failures)}" for c in checks]
        return lines
    lines = []
    for c in checks:
        k = len(c.instances)
        lines.append(f"{c.id} {c.status} ({k} instance{'' if k == 1 else 's'})")
        for inst in c.failures:
            fields = " ".join(f"{key}={val}" for key, val in inst.to_dict().items())
            lines.append(f"  {fields}")
    return lines


def _render_report(report: padic.VolkenbornReport, fmt: str) -> List[str]:
    if fmt == "json":
        return [_dumps(report.to_dict())]
    header = ("N", "sum", "limit", "error", "valuation")
    sep = "," if fmt == "csv" else " "
    return [sep.join(header)] + [sep.join(r) for r in report.rows()]


# -- dispatch ----------------------------------------------------------------

def _run(args, parser) -> int:
    out: List[str]
    status = EXIT_OK
    if args.command == "table":
        if args.n_max > TABLE_MAX:
            parser.error(f"--n-max is limited to {TABLE_MAX}")
        out = _render_table(args)
    elif args.command == "eval":
        out = _render_eval(args, parser)
    elif args.command == "verify":
        ids = None if args.ids == "all" else [s for s in args.ids.split(",") if s]
        checks = identities.verify_all(args.n_max, args.x, ids=ids, trunc=args.trunc)
        out = _render_checks(checks, args.format)
        if not all(c.passed for c in checks):
            status = EXIT_FAIL
    else:
        if args.p not in PRIMES:
            parser.error(f"--p must be one of {', '.join(map(str, PRIMES))}")
        f = padic.Integrand(KINDS[args.kind], args.n, args.x)
        report = padic.convergence_report(f, args.p, args.levels)
        out = _render_report(report, args.format)
    sys.stdout.write("".join(line + "\n" for line in out))
    return status


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args, parser)
    except UnknownIdentityError as exc:
        print(f"daehee: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"daehee: error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except DaeheeError as exc:
        print(f"daehee: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
