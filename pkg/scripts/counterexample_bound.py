"""Compare shortest counterexample lengths of random DFAs with n^2 + n - 1."""

import argparse
from collections import defaultdict

from langclosure.closure_check import shortest_counterexample
from langclosure.generators import random_dfa


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-states", type=int, default=8)
    ap.add_argument("--per-size", type=int, default=200)
    ap.add_argument("--alphabet", default="a b")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    alphabet = tuple(args.alphabet.split())
    longest = defaultdict(int)
    failing = defaultdict(int)
    for n in range(1, args.max_states + 1):
        for i in range(args.per_size):
            cx = shortest_counterexample(random_dfa(n, alphabet, seed=args.seed + 1000 * n + i))
            if cx is not None:
                failing[n] += 1
                longest[n] = max(longest[n], len(cx.uv))
    print(f"{'n':>3} {'not closed':>11} {'max |uv|':>9} {'bound':>6}")
    for n in range(1, args.max_states + 1):
        print(f"{n:>3} {failing[n]:>11} {longest[n]:>9} {n * n + n - 1:>6}")


if __name__ == "__main__":
    main()
