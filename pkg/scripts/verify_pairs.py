#!/usr/bin/env python3
"""Sweep all size pairs up to a limit and report the intersection bound check.

Equivalent to `minword verify --max-n N` but handy for quick edits while
experimenting (e.g. printing only failures, or timing the sweep).
"""

import argparse
import sys
import time

from minword import verify_range


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=30, dest="max_n")
    parser.add_argument("--failures-only", action="store_true")
    args = parser.parse_args()

    started = time.monotonic()
    rows = verify_range(args.max_n)
    elapsed = time.monotonic() - started

    for row in rows:
        if args.failures_only and row.passed:
            continue
        print(
            f"m={row.m:<3} n={row.n:<3} expected={row.expected:<5} lss={row.lss:<5} "
            f"sc=({row.sc_ones},{row.sc_ramp}) passed={row.passed}"
        )
    failures = sum(1 for row in rows if not row.passed)
    print(f"{len(rows)} pairs in {elapsed:.2f}s, {failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
