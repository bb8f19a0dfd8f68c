"""Time the closure check on the witness family and report doubling ratios.

A quadratic procedure should show ratios near 4 as n doubles.
"""

import argparse
import time

from langclosure.closure_check import check_property
from langclosure.generators import WitnessSpec, witness_automaton


def best_time(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[25, 50, 100, 200, 400])
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()
    prev = None
    print(f"{'n':>5} {'states':>7} {'|uv|':>7} {'ms':>9} {'ratio':>6}")
    for n in args.sizes:
        m = witness_automaton(WitnessSpec(n))
        verdict = check_property(m, "pos-closed")
        t = best_time(lambda: check_property(m, "pos-closed"), args.repeats)
        ratio = "" if prev is None else f"{t / prev:.2f}"
        print(f"{n:>5} {m.n:>7} {len(verdict.certificate.uv):>7} {t * 1000:>9.2f} {ratio:>6}")
        prev = t


if __name__ == "__main__":
    main()
