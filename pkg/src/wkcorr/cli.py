"""Command-line front end.

Subcommands:
  compute  evaluate one correlator, printed as an exact p/q string
  table    emit all values up to a genus bound as CSV or JSON
  verify   run the full identity suite plus oracle cross-checks
  bench    time the two closed forms and report coefficient-evaluation counts

Exit codes: 0 success, 1 verification/equivalence failure, 2 usage or
domain error.  All rationals are rendered in lowest terms, never as floats.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import coefficients, correlators, identities, oracle
from .correlators import EquivalenceError

__all__ = ["main"]

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wkcorr",
        description="Exact two-point correlators of psi-class intersection numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="compute one correlator value")
    p_compute.add_argument("d1", type=int)
    p_compute.add_argument("d2", type=int)
    p_compute.add_argument("--method", choices=["bdy", "zograf", "both"], default="both")

    p_table = sub.add_parser("table", help="emit all values up to a genus bound")
    p_table.add_argument("--genus-max", type=int, required=True)
    p_table.add_argument("--format", choices=["csv", "json"], default="csv")

    p_verify = sub.add_parser("verify", help="run the identity suite")
    p_verify.add_argument("--genus-max", type=int, required=True)
    p_verify.add_argument(
        "--oracle-genus-max",
        type=int,
        default=None,
        help="cross-check against the recursion oracle up to this genus "
        "(default: min(genus-max, 3))",
    )

    p_bench = sub.add_parser("bench", help="time the closed forms")
    p_bench.add_argument("--genus-max", type=int, required=True)
    p_bench.add_argument("--method", choices=["bdy", "zograf", "both"], default="both")

    return parser


def _cmd_compute(args: argparse.Namespace) -> int:
    try:
        value = correlators.two_point(args.d1, args.d2, args.method)
    except EquivalenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(value)
    return EXIT_OK


def _cmd_table(args: argparse.Namespace) -> int:
    if args.genus_max < 1:
        print("error: --genus-max must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        rows = [
            (g, d1, d2, value)
            for g in range(1, args.genus_max + 1)
            for d1, d2, value in correlators.genus_row(g, "both")
        ]
    except EquivalenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    if args.format == "csv":
        print("g,d1,d2,value")
        for g, d1, d2, value in rows:
            print(f"{g},{d1},{d2},{value}")
    else:
        records = [{"g": g, "d1": d1, "d2": d2, "value": str(value)} for g, d1, d2, value in rows]
        print(json.dumps(records, indent=2))
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.genus_max < 1:
        print("error: --genus-max must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    oracle_max = args.oracle_genus_max
    if oracle_max is None:
        oracle_max = min(args.genus_max, 3)
    if oracle_max > args.genus_max or oracle_max < 0:
        print("error: --oracle-genus-max must lie in [0, genus-max]", file=sys.stderr)
        return EXIT_USAGE

    summary = identities.verify_range(args.genus_max)
    for identity_id in sorted(summary.counts):
        print(f"{identity_id}: {summary.counts[identity_id]} instances")

    oracle_checked = 0
    oracle_failed = 0
    for g in range(1, oracle_max + 1):
        for d1 in range(3 * g):
            d2 = 3 * g - 1 - d1
            expected = oracle.intersection(g, (d1, d2))
            oracle_checked += 1
            try:
                value = correlators.two_point(d1, d2, "both")
            except EquivalenceError:
                oracle_failed += 1
                continue
            if value != expected:
                oracle_failed += 1
                print(
                    f"oracle mismatch at (g={g}, d1={d1}, d2={d2}): "
                    f"closed forms give {value}, recursion gives {expected}",
                    file=sys.stderr,
                )
    print(f"oracle: {oracle_checked} instances, {oracle_failed} failures")

    failed = summary.failed + oracle_failed
    print(f"total: {summary.total + oracle_checked} checks, "
          f"{summary.passed + oracle_checked - oracle_failed} passed, {failed} failed")
    for report in summary.failures:
        print(
            f"FAILED {report.identity_id} {report.params}: "
            f"lhs = {report.lhs}, rhs = {report.rhs}",
            file=sys.stderr,
        )
    return EXIT_OK if failed == 0 else EXIT_VERIFY_FAILED


def _cmd_bench(args: argparse.Namespace) -> int:
    if args.genus_max < 1:
        print("error: --genus-max must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    methods = ["bdy", "zograf"] if args.method == "both" else [args.method]
    for method in methods:
        correlators.clear_caches()
        coefficients.reset_eval_counts()
        start = time.perf_counter()
        for g in range(1, args.genus_max + 1):
            correlators.genus_row(g, method)
        elapsed = time.perf_counter() - start
        counts = coefficients.eval_counts()
        print(
            f"method={method} genus_max={args.genus_max} wall_s={elapsed:.3f} "
            f"a_evals={counts['bdy']} b_evals={counts['zograf']}"
        )
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "compute": _cmd_compute,
        "table": _cmd_table,
        "verify": _cmd_verify,
        "bench": _cmd_bench,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    raise SystemExit(main())
