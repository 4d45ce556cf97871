"""Command-line front end.

Subcommands map one-to-one onto the library surface:

* ``pairs``      prime-pair count for one n (plain number by default)
* ``breakdown``  formula and oracle columns for every witness prime of n
* ``formulas``   closed-form table with asymptotic only-by values
* ``estimate``   survival-product estimate for one n
* ``scan``       family scan records
* ``twin``       gap-pair scan (twin primes by default)
* ``audit``      claim registry; --strict exits 1 on any FAIL

Exit codes: 0 success, 1 strict-audit failure or I/O error, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .audit import FAIL, run_audit
from .estimator import estimate_prime_pairs
from .formulas import breakdown_report, formula_table
from .pairs import ORDERED, UNORDERED, prime_pair_count
from .scans import FAMILIES, estimate_vs_actual_scan, family_scan, twin_scan
from .serialize import render_csv, render_json


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="goldbach-lab",
        description="Exact Goldbach pair counting, closed-form formulas, and estimate audits.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output_flags(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", help="write to this path instead of stdout")

    p = sub.add_parser("pairs", help="prime-pair count for one even n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--convention", choices=(ORDERED, UNORDERED), default=ORDERED)
    p.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    p.add_argument("--out", help="write to this path instead of stdout")

    p = sub.add_parser("breakdown", help="per-prime non-prime pair table for one n")
    p.add_argument("--n", type=int, required=True)
    add_output_flags(p)

    p = sub.add_parser("formulas", help="closed-form divisibility table for one n")
    p.add_argument("--n", type=int, required=True)
    add_output_flags(p)

    p = sub.add_parser("estimate", help="survival-product pair estimate")
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--n", type=int, help="single record for this n")
    target.add_argument("--max", type=int, help="scan every n=2p up to this, with actual counts")
    p.add_argument("--threads", type=int, default=1)
    add_output_flags(p)

    p = sub.add_parser("scan", help="family scan of pair counts")
    p.add_argument("--max", type=int, default=5000)
    p.add_argument(
        "--family",
        action="append",
        choices=sorted(FAMILIES),
        help="repeatable; defaults to 2p 6p 10p 30p",
    )
    p.add_argument("--threads", type=int, default=1)
    add_output_flags(p)

    p = sub.add_parser("twin", help="gap-pair scan (twin primes by default)")
    p.add_argument("--max", type=int, default=10000)
    p.add_argument("--gap", type=int, default=2)
    add_output_flags(p)

    p = sub.add_parser("audit", help="recompute reference values and report agreement")
    p.add_argument("--max", type=int, default=5000)
    p.add_argument("--strict", action="store_true", help="exit 1 if any claim FAILs")
    add_output_flags(p)

    return parser


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def _emit(records, args) -> None:
    if args.format == "csv":
        _write(render_csv(records), args.out)
    else:
        _write(render_json(records), args.out)


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_request:  # argparse handles usage errors and --help
        return int(exit_request.code or 0)

    try:
        if args.command == "pairs":
            count = prime_pair_count(args.n, args.convention)
            if args.format == "plain":
                _write(f"{count}\n", args.out)
            elif args.format == "csv":
                _write(f"n,convention,count\n{args.n},{args.convention},{count}\n", args.out)
            else:
                _write(
                    f'{{\n  "n": {args.n},\n  "convention": "{args.convention}",'
                    f'\n  "count": {count}\n}}\n',
                    args.out,
                )
        elif args.command == "breakdown":
            _emit(breakdown_report(args.n), args)
        elif args.command == "formulas":
            _emit(formula_table(args.n), args)
        elif args.command == "estimate":
            if args.n is not None:
                _emit([estimate_prime_pairs(args.n)], args)
            else:
                _emit(estimate_vs_actual_scan(args.max, threads=args.threads), args)
        elif args.command == "scan":
            families = args.family or ["2p", "6p", "10p", "30p"]
            _emit(family_scan(families, args.max, threads=args.threads), args)
        elif args.command == "twin":
            _emit(twin_scan(args.max, gap=args.gap), args)
        elif args.command == "audit":
            outcomes = run_audit(args.max, strict=args.strict)
            _emit(outcomes, args)
            if args.strict and any(o.status == FAIL for o in outcomes):
                return 1
    except ValueError as error:
        print(f"error: {error}", file=sys.stderr)
        return 2
    except OSError as error:
        print(f"error: {error}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())
