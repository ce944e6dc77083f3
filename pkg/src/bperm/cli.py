"""
Command-line interface.

Subcommands:

* count / sequence -- exact avoider counts over a size range
* list             -- elements of a characterized family at one size
* basis            -- classical basis of a global avoidance class
* tableaux         -- standard Young or domino tableaux of a shape
* occurrences      -- global occurrences of one pattern in one element
* verify           -- run the theorem/conjecture checks

Pattern sets use the shared grammar: patterns separated by ";", entries by
",".  Counts honor the BPERM_CACHE environment variable as an on-disk memo.
Exit status: 0 on success, 1 if a theorem check failed, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable, Sequence

from .classes import (
    is_bigrassmannian,
    is_boolean,
    is_free,
    is_grassmannian,
    is_smooth_B,
    is_smooth_BC,
    is_smooth_C,
    is_vexillary,
)
from .core import Permutation, SignedPermutation, signed_permutations
from .enumeration import sequence as count_sequence
from .harness import CHECKS, any_theorem_failed, run_all, run_check
from .patterns import (
    count_global_occurrences,
    global_basis,
    parse_signed_patterns,
    parse_unsigned_patterns,
)
from .tableaux import domino_tableaux, parse_partition, standard_tableaux

PROPERTIES: dict[str, Callable[[SignedPermutation], bool]] = {
    "vexillary": is_vexillary,
    "boolean": is_boolean,
    "free": is_free,
    "smooth-b": is_smooth_B,
    "smooth-c": is_smooth_C,
    "smooth-bc": is_smooth_BC,
    "grassmannian": is_grassmannian,
    "bigrassmannian": is_bigrassmannian,
}


def parse_size_range(text: str) -> range:
    """Parse "A..B" (inclusive) or a single size "N"."""
    if ".." in text:
        low_text, high_text = text.split("..", 1)
        low, high = int(low_text), int(high_text)
    else:
        low = high = int(text)
    if low < 0 or high < low:
        raise ValueError(f"bad size range {text!r}")
    return range(low, high + 1)


def _cmd_count(args: argparse.Namespace, table_output: bool) -> int:
    if args.mode == "global":
        patterns = parse_unsigned_patterns(args.patterns)
    else:
        patterns = parse_signed_patterns(args.patterns)
    table = count_sequence(
        patterns,
        parse_size_range(args.n),
        mode=args.mode,
        jobs=args.jobs,
        cache_path=os.environ.get("BPERM_CACHE"),
        label=args.patterns,
    )
    if table_output and args.format == "csv":
        width = max(len(str(n)) for n, _ in table.rows)
        print(f"# {table.label} ({args.mode}, {table.provenance})")
        for n, count in table.rows:
            print(f"{n:>{width}}  {count}")
    elif args.format == "json":
        payload = [{"n": n, "count": str(count)} for n, count in table.rows]
        print(json.dumps(payload))
    else:
        print("n,count")
        for n, count in table.rows:
            print(f"{n},{count}")
    return 0


def _cmd_list(args: argparse.Namespace) -> int:
    predicate = PROPERTIES[args.property]
    for w in signed_permutations(args.n):
        if predicate(w):
            print(w)
    return 0


def _cmd_basis(args: argparse.Namespace) -> int:
    patterns = parse_unsigned_patterns(args.patterns)
    for signed_pattern in global_basis(patterns):
        print(signed_pattern)
    return 0


def _cmd_tableaux(args: argparse.Namespace) -> int:
    shape = parse_partition(args.shape)
    if args.domino:
        items = [str(t) for t in domino_tableaux(shape)]
    else:
        items = [
            "/".join(",".join(str(v) for v in row) for row in rows)
            for rows in standard_tableaux(shape)
        ]
    if args.count:
        print(len(items))
    else:
        for item in items:
            print(item)
    return 0


def _cmd_occurrences(args: argparse.Namespace) -> int:
    w = SignedPermutation.from_text(args.window)
    p = Permutation.from_text(args.pattern)
    print(count_global_occurrences(w, p))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.check is not None:
        reports = [run_check(args.check, args.max_n, jobs=args.jobs)]
    else:
        reports = run_all(args.max_n, jobs=args.jobs)
    if args.format == "json":
        print(json.dumps([report.to_json_dict() for report in reports], indent=2))
    else:
        for report in reports:
            flag = report.status.upper()
            print(f"{flag:17} {report.check} (max_n={report.max_n}, {report.millis} ms)")
            if not report.ok():
                for row in report.rows:
                    if row.expected != row.observed:
                        print(f"    n={row.n}: expected {row.expected}, observed {row.observed}")
    return 1 if any_theorem_failed(reports) else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bperm",
        description="signed permutations: pattern avoidance, tableaux, verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in [
        ("count", "CSV/JSON avoider counts over a size range"),
        ("sequence", "like count, with aligned table output"),
    ]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--patterns", required=True, help="pattern set, e.g. '3,2,1' or '2,1,4,3;1,2,3,4'")
        p.add_argument("--mode", choices=["global", "classical"], default="global")
        p.add_argument("--n", required=True, help="size range A..B or single size")
        p.add_argument("--jobs", type=int, default=1, help="worker processes")
        p.add_argument(
            "--format",
            choices=["csv", "json"],
            default="csv",
            help="output format (the sequence alias renders csv as a table)",
        )

    p = sub.add_parser("list", help="windows of one characterized family")
    p.add_argument("--property", required=True, choices=sorted(PROPERTIES))
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("basis", help="classical basis of a global avoidance class")
    p.add_argument("--patterns", required=True)

    p = sub.add_parser("tableaux", help="standard Young or domino tableaux of a shape")
    p.add_argument("--shape", required=True, help="partition, e.g. '4,2'")
    p.add_argument("--domino", action="store_true", help="domino tableaux instead of SYT")
    p.add_argument("--count", action="store_true", help="print only the count")

    p = sub.add_parser("occurrences", help="global occurrences of a pattern in a window")
    p.add_argument("--pattern", required=True, help="unsigned pattern, e.g. '2,1,3'")
    p.add_argument(
        "--window",
        required=True,
        help="signed window; use the = form for leading minus, e.g. --window=-2,1,3,-4",
    )

    p = sub.add_parser("verify", help="run the theorem/conjecture checks")
    p.add_argument("--check", choices=sorted(CHECKS), help="run one check only")
    p.add_argument("--max-n", type=int, default=None, dest="max_n")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=["text", "json"], default="text")

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "count":
            return _cmd_count(args, table_output=False)
        if args.command == "sequence":
            return _cmd_count(args, table_output=True)
        if args.command == "list":
            return _cmd_list(args)
        if args.command == "basis":
            return _cmd_basis(args)
        if args.command == "tableaux":
            return _cmd_tableaux(args)
        if args.command == "occurrences":
            return _cmd_occurrences(args)
        if args.command == "verify":
            return _cmd_verify(args)
        parser.error(f"unknown command {args.command!r}")
    except (ValueError, KeyError) as exc:
        parser.exit(2, f"bperm: {exc}\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
