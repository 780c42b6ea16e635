#!/usr/bin/env python3
"""Exhaustive tuple search over small binary-alphabet languages.

Defaults to the (2, 2, 3) case, where the pairwise pattern breaks down: no
triple of languages with these state complexities pushes the shortest common
word to length 2*2*3 - 1 = 11.  The search prints the maximum that is
actually attained and a witness tuple.
"""

import argparse
import sys
import time

from minword import format_word, tightness_search
from minword.interchange import dumps


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="2,2,3", help="comma-separated state counts")
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()
    sizes = [int(part) for part in args.sizes.split(",")]

    started = time.monotonic()
    report = tightness_search(sizes, workers=args.workers)
    elapsed = time.monotonic() - started

    print(f"sizes:              {report.sizes}")
    print(f"target:             {report.target}")
    print(f"max lss attained:   {report.max_lss}")
    print(f"bound attained:     {report.attained}")
    print(f"tuples examined:    {report.tuples_examined}")
    print(f"tuples skipped:     {report.tuples_skipped}")
    print(f"languages per size: {report.languages_per_size}")
    print(f"witness word:       {format_word(report.witness_dfas[0].alphabet, report.witness_word)!r}")
    print("witness tuple:")
    for dfa in report.witness_dfas:
        print(f"  {dumps(dfa)}")
    print(f"search time:        {elapsed:.1f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
