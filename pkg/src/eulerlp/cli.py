"""Command line interface.

Subcommands:
  euler   print Euler numbers E_0..E_nmax as "num/den" strings
  lp      evaluate l_p(s, w^t) mod p^M
  verify  run one named check and report both sides
  grid    run every check suite over a parameter grid

Exit status: 0 when all reports match, 1 on any mismatch, 2 on usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .characters import teichmuller_power
from .euler import euler_numbers
from .harness import (
    GridConfig,
    binomial_product_report,
    binomial_ratio_report,
    distribution_report,
    power_sum_report,
    run_grid,
    verify_main_congruence,
)
from .lfunctions import TruncationPlan, interpolation_check, kummer_check, padic_l
from .padic import PadicContext
from .reports import format_rational, parse_rational, reports_to_csv, reports_to_jsonl

CHECK_CHOICES = (
    "theorem6",
    "interpolation",
    "kummer",
    "distribution",
    "powersum",
    "binomial",
)


def _int_list(text: str) -> tuple[int, ...]:
    """Parse "2,4,6" or "1..4" (or a single integer)."""
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        return tuple(range(int(lo), int(hi) + 1))
    return tuple(int(part) for part in text.split(",") if part)


def _require(args, names: list[str]) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise ValueError(f"check {args.check!r} needs {', '.join(missing)}")


def _emit(reports, fmt: str) -> int:
    if fmt == "csv":
        print(reports_to_csv(reports))
    else:
        print(reports_to_jsonl(reports))
    return 0 if all(r.match for r in reports) else 1


def cmd_euler(args) -> int:
    for i, value in enumerate(euler_numbers(args.nmax)):
        print(json.dumps({"n": i, "value": format_rational(value)}, separators=(",", ":")))
    return 0


def cmd_lp(args) -> int:
    ctx = PadicContext(args.p, args.precision)
    chi = teichmuller_power(args.t, ctx)
    value = padic_l(args.s, chi, ctx, TruncationPlan(args.precision))
    out = {
        "s": args.s,
        "character": chi.descriptor(),
        "value": value.as_json_dict(),
    }
    print(json.dumps(out, separators=(",", ":")))
    return 0


def cmd_verify(args) -> int:
    check = args.check
    if check == "theorem6":
        _require(args, ["p", "n", "r"])
        reports = [verify_main_congruence(args.p, args.n, args.r, args.precision)]
    elif check == "interpolation":
        _require(args, ["p", "n"])
        ctx = PadicContext(args.p, args.precision)
        chi = teichmuller_power(args.t, ctx)
        reports = [interpolation_check(args.n, chi, ctx, args.precision)]
    elif check == "kummer":
        _require(args, ["p", "k"])
        ctx = PadicContext(args.p, max(args.precision, 1))
        reports = [kummer_check(args.k, args.t, ctx, args.k2)]
    elif check == "distribution":
        _require(args, ["n", "f"])
        reports = [distribution_report(args.n, args.f, parse_rational(args.x))]
    elif check == "powersum":
        _require(args, ["n", "m"])
        reports = [power_sum_report(args.n, args.m)]
    else:  # binomial
        _require(args, ["r", "k", "j"])
        reports = [
            binomial_ratio_report(args.r, args.k),
            binomial_product_report(args.r, args.k, args.j),
        ]
    return _emit(reports, args.format)


def cmd_grid(args) -> int:
    config = GridConfig(
        primes=_int_list(args.primes),
        r_values=_int_list(args.r),
        n_values=_int_list(args.n),
        precision=args.precision,
        output_format=args.format,
    )
    reports = run_grid(config, threads=args.threads)
    return _emit(reports, config.output_format)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulerlp",
        description="Exact Euler numbers, p-adic l-values, and congruence checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_euler = sub.add_parser("euler", help="print Euler numbers")
    p_euler.add_argument("--nmax", type=int, required=True)
    p_euler.set_defaults(func=cmd_euler)

    p_lp = sub.add_parser("lp", help="evaluate l_p(s, w^t)")
    p_lp.add_argument("--p", type=int, required=True)
    p_lp.add_argument("--s", type=int, required=True)
    p_lp.add_argument("--t", type=int, default=0)
    p_lp.add_argument("--precision", type=int, default=6)
    p_lp.set_defaults(func=cmd_lp)

    p_verify = sub.add_parser("verify", help="run one check")
    p_verify.add_argument("--check", choices=CHECK_CHOICES, required=True)
    p_verify.add_argument("--p", type=int)
    p_verify.add_argument("--n", type=int)
    p_verify.add_argument("--r", type=int)
    p_verify.add_argument("--k", type=int)
    p_verify.add_argument("--k2", type=int)
    p_verify.add_argument("--t", type=int, default=0)
    p_verify.add_argument("--f", type=int)
    p_verify.add_argument("--m", type=int)
    p_verify.add_argument("--j", type=int)
    p_verify.add_argument("--x", default="0/1", help='rational point "num/den"')
    p_verify.add_argument("--precision", type=int, default=6)
    p_verify.add_argument("--format", choices=("json", "csv"), default="json")
    p_verify.set_defaults(func=cmd_verify)

    p_grid = sub.add_parser("grid", help="run all suites over a grid")
    p_grid.add_argument("--primes", required=True, help='e.g. "3,5,7"')
    p_grid.add_argument("--r", required=True, help='e.g. "1..4"')
    p_grid.add_argument("--n", required=True, help='e.g. "2,4,6"')
    p_grid.add_argument("--precision", type=int, default=6)
    p_grid.add_argument("--format", choices=("json", "csv"), default="json")
    p_grid.add_argument("--threads", type=int, default=1)
    p_grid.set_defaults(func=cmd_grid)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
