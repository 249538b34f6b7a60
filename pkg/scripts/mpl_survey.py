#!/usr/bin/env python3
"""Survey exact minimum pumping lengths over a random pattern corpus.

Prints the distribution of p, the ratio of p to DFA size, and the slowest
members, giving a quick feel for where the exact decision procedure spends
its time.
"""

import argparse
import random
import sys
import time
from collections import Counter

from pumplab import compile, determinize, min_pumping_length_exact
from pumplab.corpus import random_regex
from pumplab.errors import ResourceLimitError


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=200)
    parser.add_argument("--depth", type=int, default=4)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    histogram: Counter[int] = Counter()
    timings: list[tuple[float, str]] = []
    skipped = 0
    for _ in range(args.count):
        regex = random_regex(rng, max_depth=args.depth)
        dfa = determinize(compile(regex))
        start = time.perf_counter()
        try:
            result = min_pumping_length_exact(dfa)
        except ResourceLimitError:
            skipped += 1
            continue
        timings.append((time.perf_counter() - start, regex))
        histogram[result.p] += 1
        assert result.p <= dfa.state_count

    print("p  count")
    for p in sorted(histogram):
        print(f"{p:<3}{histogram[p]:>5}  {'#' * histogram[p]}")
    if skipped:
        print(f"(skipped {skipped} members at the product state cap)")
    timings.sort(reverse=True)
    print("slowest members:")
    for elapsed, regex in timings[:5]:
        print(f"  {elapsed * 1000:7.1f} ms  {regex}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
