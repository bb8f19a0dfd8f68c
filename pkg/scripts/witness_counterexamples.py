"""Print the shortlex-least shortest counterexample of each witness automaton."""

import argparse

from langclosure.automata import format_word
from langclosure.closure_check import shortest_counterexample
from langclosure.generators import WitnessSpec, witness_automaton


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=8)
    args = ap.parse_args()
    for n in range(2, args.max_n + 1):
        m = witness_automaton(WitnessSpec(n))
        cx = shortest_counterexample(m)
        print(f"n={n} states={m.n} |uv|={len(cx.uv)} (n^2+2n+2={n * n + 2 * n + 2}) "
              f"u={format_word(cx.u)} v={format_word(cx.v)}")


if __name__ == "__main__":
    main()
