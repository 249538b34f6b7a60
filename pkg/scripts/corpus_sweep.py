#!/usr/bin/env python3
"""Cross-check the automaton pipeline against the brute-force oracle.

Draws a random pattern corpus, computes the language slice up to a length
bound three ways (oracle matcher, NFA simulation, determinized DFA), and
reports any disagreement. Exits non-zero if the routes ever differ.
"""

import argparse
import random
import sys
import time

from pumplab import compile, determinize, parse_ast
from pumplab.corpus import (dfa_language, nfa_language, oracle_language,
                            random_regex)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=500)
    parser.add_argument("--depth", type=int, default=4)
    parser.add_argument("--max-len", type=int, default=6)
    parser.add_argument("--seed", type=int, default=0xC0FFEE)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    start = time.perf_counter()
    disagreements = 0
    for n in range(args.count):
        regex = random_regex(rng, max_depth=args.depth)
        nfa = compile(regex)
        alphabet = "".join(sorted(nfa.alphabet))
        oracle = oracle_language(parse_ast(regex), alphabet, args.max_len)
        via_nfa = nfa_language(nfa, args.max_len)
        via_dfa = dfa_language(determinize(nfa), args.max_len)
        if not (oracle == via_nfa == via_dfa):
            disagreements += 1
            diff = sorted((oracle ^ via_nfa) | (oracle ^ via_dfa))[:5]
            print(f"DISAGREE {regex!r}: {diff}")
    elapsed = time.perf_counter() - start
    print(f"{args.count} regexes, strings <= {args.max_len}: "
          f"{disagreements} disagreements in {elapsed:.1f}s")
    return 1 if disagreements else 0


if __name__ == "__main__":
    sys.exit(main())
