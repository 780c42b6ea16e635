"""Command-line front end.

Subcommands: witness, verify, search, lss, export-dot.  Exit codes: 0 on
success/pass, 1 when a verified claim fails (or an lss query finds an empty
intersection), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict
from datetime import datetime, timezone
from pathlib import Path

from .automaton import AlphabetMismatchError, Dfa, InvalidDfaError, format_word
from .constructions import ones_mod_dfa, ramp_cycle_dfa
from .dot import to_dot
from .enumeration import (
    BudgetExceededError,
    DEFAULT_MAX_TUPLES,
    SearchReport,
    tightness_search,
)
from .interchange import InterchangeError, load_path, to_document
from .product import product
from .reports import build_witness_report, verify_range
from .shortest import intersection_lss

SCHEMA_VERSION = 1

_WITNESS_COLUMNS = [
    "m",
    "n",
    "expected",
    "lss",
    "witness",
    "formula_word",
    "formula_word_accepted",
    "sc_ones",
    "sc_ramp",
    "passed",
]


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _document(command: str, fields: dict, args) -> dict:
    doc = {"schema_version": SCHEMA_VERSION, "command": command}
    doc.update(fields)
    if getattr(args, "timestamp", False):
        doc["timestamp"] = datetime.now(timezone.utc).isoformat()
    return doc


def _emit_json(doc: dict) -> None:
    print(json.dumps(doc, indent=2))


def _emit_csv(rows: list[dict], columns: list[str]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_fmt(row[col]) for col in columns])
    sys.stdout.write(buf.getvalue())


def _swap_sizes(m: int, n: int) -> tuple[int, int]:
    if m > n:
        print(f"note: swapped sizes to m={n}, n={m}", file=sys.stderr)
        return n, m
    return m, n


def _ones_labels(m: int) -> list[str]:
    return [f"p_{a}" for a in range(m)]


def _ramp_labels(n: int) -> list[str]:
    return [f"q_{a}" for a in range(n)]


def _write_construction_dots(m: int, n: int, directory: Path) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    ones = ones_mod_dfa(m)
    ramp = ramp_cycle_dfa(m, n)
    prod = product([ones, ramp])
    labels = [f"({_ones_labels(m)[a]},{_ramp_labels(n)[b]})" for a, b in prod.tags]
    (directory / "ones.dot").write_text(to_dot(ones, _ones_labels(m), name="ones"))
    (directory / "ramp.dot").write_text(to_dot(ramp, _ramp_labels(n), name="ramp"))
    (directory / "product.dot").write_text(to_dot(prod.dfa, labels, name="product"))


def cmd_witness(args) -> int:
    m, n = _swap_sizes(args.m, args.n)
    report = build_witness_report(m, n)
    if args.dot:
        _write_construction_dots(m, n, Path(args.dot))
    if args.format == "structured":
        _emit_json(_document("witness", asdict(report), args))
    elif args.format == "csv":
        _emit_csv([asdict(report)], _WITNESS_COLUMNS)
    else:
        for col in _WITNESS_COLUMNS:
            print(f"{col}: {_fmt(getattr(report, col))}")
    return 0 if report.passed else 1


def cmd_verify(args) -> int:
    rows = verify_range(args.max_n)
    all_passed = all(r.passed for r in rows)
    if args.format == "structured":
        doc = _document(
            "verify",
            {
                "max_n": args.max_n,
                "rows": [asdict(r) for r in rows],
                "all_passed": all_passed,
            },
            args,
        )
        _emit_json(doc)
    elif args.format == "csv":
        _emit_csv([asdict(r) for r in rows], _WITNESS_COLUMNS)
    else:
        header = f"{'m':>3} {'n':>3} {'expected':>9} {'lss':>9} {'sc_ones':>7} {'sc_ramp':>7} {'formula_ok':>10} {'passed':>6}"
        print(header)
        for r in rows:
            print(
                f"{r.m:>3} {r.n:>3} {r.expected:>9} {r.lss:>9} {r.sc_ones:>7} {r.sc_ramp:>7} "
                f"{_fmt(r.formula_word_accepted):>10} {_fmt(r.passed):>6}"
            )
        print(f"{len(rows)} pairs, {'all passed' if all_passed else 'FAILURES present'}")
    return 0 if all_passed else 1


def _search_fields(report: SearchReport) -> dict:
    return {
        "sizes": list(report.sizes),
        "target": report.target,
        "max_lss": report.max_lss,
        "attained": report.attained,
        "tuples_examined": report.tuples_examined,
        "tuples_skipped": report.tuples_skipped,
        "languages_per_size": list(report.languages_per_size),
        "witness_word": format_word(report.witness_dfas[0].alphabet, report.witness_word),
        "witness_dfas": [to_document(d) for d in report.witness_dfas],
    }


def cmd_search(args) -> int:
    report = tightness_search(args.sizes, workers=args.workers, max_tuples=args.budget)
    fields = _search_fields(report)
    if args.format == "structured":
        _emit_json(_document("search", fields, args))
    elif args.format == "csv":
        print("error: csv output is only available for tabular commands (witness, verify)", file=sys.stderr)
        return 2
    else:
        for key, value in fields.items():
            if key == "witness_dfas":
                print("witness_dfas:")
                for doc in value:
                    print(f"  {json.dumps(doc, separators=(',', ':'))}")
            elif isinstance(value, list):
                print(f"{key}: {','.join(map(str, value))}")
            else:
                print(f"{key}: {_fmt(value)}")
    return 0


def cmd_lss(args) -> int:
    dfas: list[Dfa] = [load_path(path) for path in args.dfa]
    result = intersection_lss(dfas)
    empty = result is None
    fields = {
        "components": len(dfas),
        "empty": empty,
        "length": None if empty else result.length,
        "witness": None if empty else format_word(dfas[0].alphabet, result.witness),
    }
    if args.format == "structured":
        _emit_json(_document("lss", fields, args))
    elif args.format == "csv":
        print("error: csv output is only available for tabular commands (witness, verify)", file=sys.stderr)
        return 2
    else:
        if empty:
            print("empty intersection")
        else:
            print(f"length: {result.length}")
            print(f"witness: {fields['witness']}")
    return 1 if empty else 0


def cmd_export_dot(args) -> int:
    if args.dfa:
        if args.source is not None:
            print("error: give either a construction name or --dfa, not both", file=sys.stderr)
            return 2
        if len(args.dfa) > 1:
            print("error: export-dot renders a single DFA file", file=sys.stderr)
            return 2
        text = to_dot(load_path(args.dfa[0]))
    else:
        if args.source is None:
            print("error: need a construction name (ones|ramp|product) or --dfa", file=sys.stderr)
            return 2
        if args.m is None:
            print("error: constructions need --m", file=sys.stderr)
            return 2
        if args.source == "ones":
            text = to_dot(ones_mod_dfa(args.m), _ones_labels(args.m), name="ones")
        else:
            if args.n is None:
                print(f"error: construction {args.source!r} needs --m and --n", file=sys.stderr)
                return 2
            m, n = _swap_sizes(args.m, args.n)
            if args.source == "ramp":
                text = to_dot(ramp_cycle_dfa(m, n), _ramp_labels(n), name="ramp")
            else:
                prod = product([ones_mod_dfa(m), ramp_cycle_dfa(m, n)])
                labels = [
                    f"({_ones_labels(m)[a]},{_ramp_labels(n)[b]})" for a, b in prod.tags
                ]
                text = to_dot(prod.dfa, labels, name="product")
    if args.dot:
        Path(args.dot).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _parse_sizes(text: str) -> tuple[int, ...]:
    try:
        sizes = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"sizes must be comma-separated integers, got {text!r}")
    if not sizes or any(s < 1 for s in sizes):
        raise argparse.ArgumentTypeError(f"sizes must be positive integers, got {text!r}")
    return sizes


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minword",
        description="Shortest accepted words of DFA intersections: build, verify, search, export.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--format",
            choices=["text", "structured", "csv"],
            default="text",
            help="output format (structured = JSON with schema_version)",
        )
        p.add_argument(
            "--timestamp",
            action="store_true",
            help="include a timestamp field in structured output",
        )

    p = sub.add_parser("witness", help="verify the mn-1 bound for one (m, n) pair")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dot", metavar="DIR", help="also write ones.dot, ramp.dot, product.dot here")
    add_common(p)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", help="verify the bound for all pairs up to --max-n")
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="exhaustive tuple search for the maximum intersection lss")
    p.add_argument("--sizes", type=_parse_sizes, required=True, metavar="A,B,...")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=int, default=DEFAULT_MAX_TUPLES, help="maximum language tuples to examine")
    add_common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("lss", help="shortest word in the intersection of DFA files")
    p.add_argument("--dfa", action="append", required=True, metavar="PATH", help="DFA document (repeatable)")
    add_common(p)
    p.set_defaults(func=cmd_lss)

    p = sub.add_parser("export-dot", help="render a construction or DFA file as DOT")
    p.add_argument("source", nargs="?", choices=["ones", "ramp", "product"])
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--dfa", action="append", metavar="PATH")
    p.add_argument("--dot", metavar="PATH", help="output file (stdout if omitted)")
    add_common(p)
    p.set_defaults(func=cmd_export_dot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (
        InterchangeError,
        InvalidDfaError,
        AlphabetMismatchError,
        BudgetExceededError,
        ValueError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
