"""Command-line front end.

    sqftori sqfree  {count,expected-linear,quad-excess,discriminant,mu-sum}
    sqftori tori    {count,types,eigenvectors,quad-excess,bias,euler,cayley}
    sqftori verify  all

Exit codes: 0 all checks pass, 1 at least one identity failed, 2 usage
error.  Reports go to stdout (or --out) as an aligned table, CSV, or
JSON; ``verify all`` defaults to the JSON report.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import suites
from .report import (
    RunConfig,
    failing_names,
    reports_to_csv,
    reports_to_json,
    reports_to_table,
    summarize,
)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n-max", type=int, default=10, help="largest degree / rank (default 10)")
    common.add_argument(
        "--prime",
        type=int,
        action="append",
        dest="primes",
        help="oracle prime, repeatable (default 2 3 5)",
    )
    common.add_argument("--order", type=int, default=24, help="series truncation order (default 24)")
    common.add_argument(
        "--budget",
        type=int,
        default=10_000_000,
        help="enumeration budget in polynomial visits (default 10^7)",
    )
    common.add_argument("--format", choices=("table", "csv", "json"), default=None)
    common.add_argument("--out", default=None, help="write the report to this file")

    parser = argparse.ArgumentParser(
        prog="sqftori",
        description="Exact verification of square-free polynomial and maximal torus counts.",
    )
    sub = parser.add_subparsers(dest="group", required=True)

    sqf = sub.add_parser("sqfree", help="square-free polynomial identities")
    sqf_sub = sqf.add_subparsers(dest="command", required=True)
    for name in ("count", "expected-linear", "quad-excess", "discriminant", "mu-sum"):
        sqf_sub.add_parser(name, parents=[common])

    tor = sub.add_parser("tori", help="maximal torus identities")
    tor_sub = tor.add_subparsers(dest="command", required=True)
    for name in ("count", "types", "eigenvectors", "quad-excess", "bias", "euler", "cayley"):
        p = tor_sub.add_parser(name, parents=[common])
        if name == "types":
            p.add_argument("--n", type=int, default=4, help="rank for the type table (default 4)")

    ver = sub.add_parser("verify", help="run every identity suite")
    ver_sub = ver.add_subparsers(dest="command", required=True)
    ver_sub.add_parser("all", parents=[common])

    return parser


_SQFREE_SUITES = {
    "count": suites.squarefree_count_reports,
    "expected-linear": suites.linear_factor_reports,
    "quad-excess": suites.quad_excess_reports,
    "discriminant": suites.discriminant_reports,
    "mu-sum": suites.mu_sum_reports,
}

_TORI_SUITES = {
    "count": suites.tori_count_reports,
    "eigenvectors": suites.eigenvector_reports,
    "quad-excess": suites.subtori_excess_reports,
    "bias": suites.mod2_bias_reports,
    "euler": suites.euler_reports,
    "cayley": suites.cayley_reports,
}


def _config_from_args(args) -> RunConfig:
    fmt = args.format
    if fmt is None:
        fmt = "json" if args.group == "verify" else "table"
    return RunConfig(
        n_max=args.n_max,
        primes=tuple(args.primes) if args.primes else (2, 3, 5),
        series_order=args.order,
        enumeration_budget=args.budget,
        output_format=fmt,
        output_path=args.out,
    )


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _config_from_args(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if args.group == "sqfree":
        reports = _SQFREE_SUITES[args.command](config)
    elif args.group == "tori":
        if args.command == "types":
            reports = suites.tori_type_reports(config, args.n)
        else:
            reports = _TORI_SUITES[args.command](config)
    else:
        reports = suites.verify_all(config)

    if config.output_format == "json":
        rendered = reports_to_json(config, reports)
    elif config.output_format == "csv":
        rendered = reports_to_csv(reports)
    else:
        rendered = reports_to_table(reports)

    if config.output_path:
        with open(config.output_path, "w", encoding="utf-8") as handle:
            handle.write(rendered)
        s = summarize(reports)
        print(
            f"wrote {config.output_path}: passed {s['passed']} / failed {s['failed']}"
        )
    else:
        sys.stdout.write(rendered)

    failures = failing_names(reports)
    if failures:
        for name in failures:
            print(f"FAILED: {name}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
