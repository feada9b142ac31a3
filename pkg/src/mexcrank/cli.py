"""Command-line front end: tables, series expansions, statistics, verification.

Machine-readable output (CSV or JSON) goes to stdout only; progress notes and
error messages go to stderr.  Exit codes: 0 for success, 1 when a
verification check fails, 2 for usage errors.  Identical invocations produce
byte-identical stdout, whatever the worker count.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from typing import Sequence

from . import counting, partitions, qseries, verify

ENV_BUDGET = "MEXCRANK_BUDGET"

_TABLE_FNS = ("p", "q", "M", "crank_geq", "x_mex", "o", "e", "o1", "o3")

_SERIES_KINDS = {
    "euler_inv": lambda args: qseries.GfKind.euler_inv(),
    "poch_q_inf": lambda args: qseries.GfKind.poch_q_inf(),
    "distinct": lambda args: qseries.GfKind.distinct(),
    "crank_m": lambda args: qseries.GfKind.crank_m(args.m),
    "crank_geq": lambda args: qseries.GfKind.crank_geq_j(args.j),
    "frob_no0": lambda args: qseries.GfKind.frob_no0(),
    "crank0_alt": lambda args: qseries.GfKind.crank0_alt(),
    "frob_noj_top": lambda args: qseries.GfKind.frob_noj_top(args.j),
    "durfee_rect": lambda args: qseries.GfKind.durfee_rect_b(args.b),
}


def _fail(message: str) -> int:
    print(f"mexcrank: error: {message}", file=sys.stderr)
    return 2


def _json_dump(payload: object) -> None:
    json.dump(payload, sys.stdout, sort_keys=True, separators=(",", ":"))
    sys.stdout.write("\n")


def _emit_rows(rows: list[dict], columns: tuple[str, str], args: argparse.Namespace) -> None:
    if args.format == "json":
        _json_dump(rows)
        return
    writer = csv.writer(sys.stdout, lineterminator="\n")
    if not args.no_header:
        writer.writerow(columns)
    for row in rows:
        writer.writerow([row[column] for column in columns])


def _add_output_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("json", "csv"), default="csv",
                        help="output format (default: csv)")
    parser.add_argument("--no-header", action="store_true",
                        help="omit the CSV header row")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mexcrank",
        description="Exact partition statistics, q-series expansions, and identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="tabulate a counting function over n = 0..n_max")
    table.add_argument("--fn", required=True, choices=_TABLE_FNS,
                       help="which function to tabulate")
    table.add_argument("--m", type=int, default=0, help="crank value for M, mex value for x_mex")
    table.add_argument("--j", type=int, default=0, help="lower crank bound for crank_geq")
    table.add_argument("--n-max", dest="n_max", type=int, default=100,
                       help="largest n (default: 100)")
    _add_output_flags(table)

    series = sub.add_parser("series", help="expand a named generating function")
    series.add_argument("--kind", required=True, choices=sorted(_SERIES_KINDS),
                        help="which generating function")
    series.add_argument("--m", type=int, default=0, help="crank parameter for crank_m")
    series.add_argument("--j", type=int, default=0,
                        help="parameter for crank_geq / frob_noj_top")
    series.add_argument("--b", type=int, default=0, help="rectangle offset for durfee_rect")
    series.add_argument("--order", type=int, default=200,
                        help="truncation order (default: 200)")
    _add_output_flags(series)

    stat = sub.add_parser("stat", help="statistics of one partition given by its parts")
    stat.add_argument("parts", nargs="*", type=int,
                      help="parts of the partition, any order; empty for the empty partition")

    vrf = sub.add_parser("verify", help="run identity checks from the registry")
    vrf.add_argument("--all", dest="run_all", action="store_true",
                     help="run every registered check (default when no --check is given)")
    vrf.add_argument("--check", dest="checks", action="append", metavar="ID",
                     help="check id to run; may be repeated")
    vrf.add_argument("--n-max", dest="n_max", type=int, default=None,
                     help="override each check's main scan range")
    vrf.add_argument("--order", type=int, default=None,
                     help="override the series truncation order")
    vrf.add_argument("--budget", type=int, default=None,
                     help=f"enumeration cap (default: {verify.DEFAULT_BUDGET}, "
                          f"or the {ENV_BUDGET} environment variable)")
    vrf.add_argument("--workers", type=int, default=1,
                     help="worker threads for grid evaluation (default: 1)")
    _add_output_flags(vrf)

    return parser


def _cmd_table(args: argparse.Namespace) -> int:
    if args.n_max < 0:
        return _fail(f"--n-max must be nonnegative, got {args.n_max}")
    fn = args.fn
    if fn == "x_mex" and args.m < 1:
        return _fail("--fn x_mex requires --m >= 1")
    if fn == "crank_geq" and args.j < 0:
        return _fail("--fn crank_geq requires --j >= 0")
    evaluators = {
        "p": lambda n: partitions.partition_count(n),
        "q": lambda n: partitions.distinct_parts_count(n),
        "M": lambda n: counting.crank_count(args.m, n),
        "crank_geq": lambda n: counting.crank_geq_count(args.j, n),
        "x_mex": lambda n: counting.mex_count(args.m, n),
        "o": counting.odd_mex_count,
        "e": counting.even_mex_count,
        "o1": counting.mex_1mod4_count,
        "o3": counting.mex_3mod4_count,
    }
    evaluate = evaluators[fn]
    rows = [{"n": n, "value": str(evaluate(n))} for n in range(args.n_max + 1)]
    _emit_rows(rows, ("n", "value"), args)
    return 0


def _cmd_series(args: argparse.Namespace) -> int:
    if args.order < 0:
        return _fail(f"--order must be nonnegative, got {args.order}")
    try:
        kind = _SERIES_KINDS[args.kind](args)
    except qseries.InvalidParamsError as exc:
        return _fail(str(exc))
    series = qseries.gf(kind, args.order)
    rows = [{"n": n, "coefficient": str(series[n])} for n in range(args.order + 1)]
    _emit_rows(rows, ("n", "coefficient"), args)
    return 0


def _cmd_stat(args: argparse.Namespace) -> int:
    if any(part < 1 for part in args.parts):
        return _fail("parts must be positive integers")
    lam = partitions.Partition.of(*args.parts)
    symbol = partitions.to_frobenius(lam)
    mex_j = {
        str(j): partitions.mex_above(lam, j)
        for j in sorted(set(lam.parts))
    }
    record = {
        "weight": lam.weight,
        "mex": partitions.mex(lam),
        "crank": partitions.crank(lam),
        "durfee": partitions.durfee_size(lam),
        "frobenius": {"top": list(symbol.top), "bottom": list(symbol.bottom)},
        "mex_j": mex_j,
    }
    _json_dump(record)
    return 0


def _resolve_budget(args: argparse.Namespace) -> int:
    if args.budget is not None:
        if args.budget < 0:
            raise ValueError(f"--budget must be nonnegative, got {args.budget}")
        return args.budget
    raw = os.environ.get(ENV_BUDGET)
    if raw is None:
        return verify.DEFAULT_BUDGET
    try:
        budget = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_BUDGET} must be an integer, got {raw!r}") from None
    if budget < 0:
        raise ValueError(f"{ENV_BUDGET} must be nonnegative, got {budget}")
    return budget


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        budget = _resolve_budget(args)
    except ValueError as exc:
        return _fail(str(exc))
    if args.workers < 1:
        return _fail(f"--workers must be positive, got {args.workers}")
    if args.n_max is not None and args.n_max < 0:
        return _fail(f"--n-max must be nonnegative, got {args.n_max}")
    if args.order is not None and args.order < 0:
        return _fail(f"--order must be nonnegative, got {args.order}")

    available = verify.checks_by_id(args.n_max, budget=budget, order=args.order)
    if args.checks:
        unknown = [check_id for check_id in args.checks if check_id not in available]
        if unknown:
            known = ", ".join(sorted(available))
            return _fail(f"unknown check id(s) {', '.join(unknown)}; known ids: {known}")
        selected = [available[check_id] for check_id in args.checks]
    else:
        selected = list(available.values())

    reports = []
    for check in selected:
        try:
            report = verify.run_check(check, workers=args.workers)
        except ValueError as exc:
            return _fail(str(exc))
        reports.append(report)
        status = "pass" if report.passed else "FAIL"
        print(f"{check.check_id}: {status} ({len(report.records)} records)", file=sys.stderr)

    all_passed = all(report.passed for report in reports)
    if args.format == "json":
        _json_dump({
            "pass": all_passed,
            "reports": [report.to_jsonable() for report in reports],
        })
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        if not args.no_header:
            writer.writerow(("check_id", "params", "lhs", "rhs", "pass"))
        for report in reports:
            for record in report.records:
                writer.writerow((
                    report.check_id,
                    json.dumps(dict(record.params), sort_keys=True, separators=(",", ":")),
                    str(record.lhs),
                    str(record.rhs),
                    "true" if record.passed else "false",
                ))
    return 0 if all_passed else 1


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "table": _cmd_table,
        "series": _cmd_series,
        "stat": _cmd_stat,
        "verify": _cmd_verify,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    raise SystemExit(main())
