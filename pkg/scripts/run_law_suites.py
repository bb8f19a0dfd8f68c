"""Run every law suite and print the one-line summary of each."""

import argparse

from langclosure.laws import SUITES, run_law_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--verbose", action="store_true", help="print violation lines too")
    args = ap.parse_args()
    bad = 0
    for name in sorted(SUITES):
        report = run_law_suite(name, trials=args.trials, seed=args.seed)
        lines = report.serialize().splitlines()
        print(lines[0])
        if args.verbose:
            for line in lines[1:]:
                print("   ", line)
        bad += not report.ok
    print(f"{bad} suite(s) with violations")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
