"""Run every applicable solver on the oracle suite and tabulate time and agreement."""

import argparse
import collections
import time

from grouped_domination.reductions import solve
from grouped_domination.solution import brute_force_min_units
from grouped_domination.suites import SuiteConfig, oracle_suite


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--max-n", type=int, default=10)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)
    graphs = oracle_suite(SuiteConfig(count=args.count, max_n=args.max_n, seed=args.seed))
    seconds = collections.Counter()
    wrong = collections.Counter()
    for g in graphs:
        for r in (1, 2, 3, 4):
            ref = brute_force_min_units(g, r)
            algos = ["vc-dp", "xp"] + ([] if r == 1 else ["tc-dp"])
            for algo in algos:
                t = time.perf_counter()
                out = solve(g, r, k_bound=g.n, algo=algo)
                seconds[algo, r] += time.perf_counter() - t
                wrong[algo, r] += out.min_units != ref.min_units
    print(f"{'algo':6} {'r':>2} {'seconds':>8} {'wrong':>5}")
    for (algo, r), s in sorted(seconds.items()):
        print(f"{algo:6} {r:>2} {s:8.3f} {wrong[algo, r]:>5}")


if __name__ == "__main__":
    main()
