"""Command line surface: generation, stats, verification, and queries.

Exit codes: 0 success (all checks pass), 1 verification failure, 2 usage
error, 3 resource or overflow error. Results go to stdout, diagnostics to
stderr. All numeric output is exact decimal; no floating point anywhere.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from typing import List, Optional, Sequence, Tuple

from . import generator, invariants, totient
from .core import Fraction, make_fraction, mediant, neighbor_det
from .errors import CapExceeded, FareyError, Overflow

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

ENV_CAP = "FAREY_CAP"


class UsageError(Exception):
    pass


def _default_cap() -> int:
    raw = os.environ.get(ENV_CAP)
    if raw is None:
        return generator.DEFAULT_CAP
    try:
        cap = int(raw)
        if cap < 1:
            raise ValueError
    except ValueError:
        raise UsageError(f"{ENV_CAP} must be a positive integer, got {raw!r}")
    return cap


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _parse_range(text: str) -> Tuple[int, int]:
    """Inclusive "lo..hi" range."""
    lo_text, sep, hi_text = text.partition("..")
    if not sep:
        raise UsageError(f"malformed range {text!r}; expected LO..HI")
    try:
        lo, hi = int(lo_text), int(hi_text)
    except ValueError:
        raise UsageError(f"malformed range {text!r}; expected LO..HI")
    if lo < 1 or hi < lo:
        raise UsageError(f"range {text!r} must satisfy 1 <= LO <= HI")
    return lo, hi


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction.parse(text)
    except (FareyError, ValueError) as exc:
        raise UsageError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="farey",
        description="Generate Farey sequences and verify their structural identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--format",
            choices=("text", "csv", "json"),
            default="text",
            help="output format (default: text)",
        )

    gen = sub.add_parser("gen", help="emit the elements of F_n")
    gen.add_argument("--order", type=_positive, required=True)
    gen.add_argument("--desc", action="store_true", help="descending order")
    gen.add_argument("--limit", type=_positive, help="emit at most this many elements")
    gen.add_argument("--cap", type=_positive, help="element cap (default 10^7 or $FAREY_CAP)")
    add_format(gen)

    stats = sub.add_parser("stats", help="length, phi, and sum statistics of F_n")
    stats.add_argument("--order", type=_positive, required=True)
    add_format(stats)

    verify = sub.add_parser("verify", help="run invariant checks over a range of orders")
    verify.add_argument("--orders", required=True, help="inclusive range LO..HI")
    verify.add_argument(
        "--checks",
        default=",".join(invariants.ALL_CHECKS),
        help="comma-separated subset of: " + ", ".join(invariants.ALL_CHECKS),
    )
    verify.add_argument("--jobs", type=_positive, default=os.cpu_count() or 1)
    add_format(verify)

    neighbors = sub.add_parser("neighbors", help="Farey neighbours of a fraction in F_n")
    neighbors.add_argument("--frac", required=True, help='fraction "a/b"')
    neighbors.add_argument("--order", type=_positive, required=True)

    med = sub.add_parser("mediant", help="formal mediant of two fractions")
    med.add_argument("x", help='fraction "a/b"')
    med.add_argument("y", help='fraction "c/d"')

    tot = sub.add_parser("totient", help="phi(n) and the coprime sum")
    tot.add_argument("n", type=_positive)
    tot.add_argument("--upto", action="store_true", help="print the table 1..n")
    tot.add_argument("--cap", type=_positive, help="sieve cap (default 10^8)")

    return parser


def _emit_records(records: List[dict], fields: Sequence[str], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(records))
    elif fmt == "csv":
        writer = csv.DictWriter(sys.stdout, fieldnames=list(fields))
        writer.writeheader()
        writer.writerows(records)
    else:
        raise AssertionError(f"unexpected format {fmt}")


def cmd_gen(args: argparse.Namespace) -> int:
    cap = args.cap if args.cap is not None else _default_cap()
    total = totient.farey_length(args.order)
    emit = total if args.limit is None else min(total, args.limit)
    if emit > cap:
        raise CapExceeded(
            f"would emit {emit} elements, exceeding cap {cap}",
            predicted=emit,
            cap=cap,
        )
    stream = (
        generator.descending_stream(args.order)
        if args.desc
        else generator.ascending_stream(args.order)
    )
    if args.format == "text":
        out = sys.stdout
        for index, frac in enumerate(stream):
            if index >= emit:
                break
            if index:
                out.write(" ")
            out.write(f"{frac.num}/{frac.den}")
        out.write("\n")
        return EXIT_OK
    records = []
    for index, frac in enumerate(stream):
        if index >= emit:
            break
        records.append({"index": index, "numerator": frac.num, "denominator": frac.den})
    _emit_records(records, ("index", "numerator", "denominator"), args.format)
    return EXIT_OK


def cmd_stats(args: argparse.Namespace) -> int:
    stats = invariants.sum_check(args.order)
    record = {
        "order": args.order,
        "length": totient.farey_length(args.order),
        "phi": totient.phi(args.order),
        "numerator_sum": stats.numerator_sum,
        "denominator_sum": stats.denominator_sum,
    }
    if args.format == "text":
        ratio = stats.denominator_sum // stats.numerator_sum
        print(
            f"order={record['order']} length={record['length']} phi={record['phi']} "
            f"numerator_sum={record['numerator_sum']} "
            f"denominator_sum={record['denominator_sum']} ratio={ratio}"
        )
    else:
        _emit_records(
            [record],
            ("order", "length", "phi", "numerator_sum", "denominator_sum"),
            args.format,
        )
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    lo, hi = _parse_range(args.orders)
    checks = [name.strip() for name in args.checks.split(",") if name.strip()]
    if not checks:
        raise UsageError("no checks selected")
    for name in checks:
        if name not in invariants.CHECKS:
            raise UsageError(
                f"unknown check {name!r}; valid: " + ", ".join(invariants.ALL_CHECKS)
            )
    reports = invariants.verify_all(range(lo, hi + 1), checks, jobs=args.jobs)
    if args.format == "text":
        for report in reports:
            for check in report.checks:
                status = "PASS" if check.passed else "FAIL"
                print(f"order={report.order} check={check.name} {status} {check.detail}")
    else:
        records = [
            {
                "order": report.order,
                "check": check.name,
                "pass": check.passed,
                "detail": check.detail,
            }
            for report in reports
            for check in report.checks
        ]
        _emit_records(records, ("order", "check", "pass", "detail"), args.format)
    all_pass = all(report.overall for report in reports)
    return EXIT_OK if all_pass else EXIT_VERIFY_FAILED


def cmd_neighbors(args: argparse.Namespace) -> int:
    frac = _parse_fraction(args.frac)
    if args.frac != f"{frac.num}/{frac.den}":
        raise UsageError(f"{args.frac} is not in reduced form")
    if frac.den > args.order:
        raise UsageError(f"{args.frac} is not a member of F_{args.order}")
    left, right = generator.neighbors(frac, args.order)
    left_text = str(left) if left is not None else "NONE"
    right_text = str(right) if right is not None else "NONE"
    left_det = str(neighbor_det(left, frac)) if left is not None else "-"
    right_det = str(neighbor_det(frac, right)) if right is not None else "-"
    print(f"left={left_text} right={right_text} left_det={left_det} right_det={right_det}")
    return EXIT_OK


def cmd_mediant(args: argparse.Namespace) -> int:
    x = _parse_fraction(args.x)
    y = _parse_fraction(args.y)
    raw = mediant(x, y)
    print(f"raw={raw} reduced={raw.reduced()}")
    return EXIT_OK


def cmd_totient(args: argparse.Namespace) -> int:
    if args.upto:
        cap = args.cap if args.cap is not None else totient.DEFAULT_SIEVE_CAP
        table = totient.phi_sieve(args.n, cap)
        for k in range(1, args.n + 1):
            print(f"n={k} phi={table[k]} coprime_sum={totient.coprime_sum(k)}")
    else:
        print(f"phi={totient.phi(args.n)} coprime_sum={totient.coprime_sum(args.n)}")
    return EXIT_OK


_COMMANDS = {
    "gen": cmd_gen,
    "stats": cmd_stats,
    "verify": cmd_verify,
    "neighbors": cmd_neighbors,
    "mediant": cmd_mediant,
    "totient": cmd_totient,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"farey: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CapExceeded, Overflow) as exc:
        print(f"farey: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except FareyError as exc:
        print(f"farey: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
