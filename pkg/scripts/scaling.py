"""Wall time and table size of vc-dp on planted vertex-cover graphs as the cover grows."""

import argparse
import csv
import sys
import time

from grouped_domination.generators import gen_planted_vc
from grouped_domination.reductions import solve


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=60)
    ap.add_argument("--nu", type=int, nargs="+", default=[8, 10, 12, 14, 16])
    ap.add_argument("--r", type=int, nargs="+", default=[2])
    ap.add_argument("--p", type=float, default=0.3)
    ap.add_argument("--seeds", type=int, default=3)
    ap.add_argument("--out", default="-")
    args = ap.parse_args(argv)
    fh = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    w = csv.writer(fh)
    w.writerow(["n", "nu", "r", "seed", "cover", "k*", "states", "bound", "seconds"])
    for nu in args.nu:
        for r in args.r:
            for seed in range(args.seeds):
                g = gen_planted_vc(args.n, nu, args.p, seed)
                t = time.perf_counter()
                out = solve(g, r, algo="vc-dp")
                dt = time.perf_counter() - t
                size = out.cover.size
                w.writerow([args.n, nu, r, seed, size, out.min_units, out.stats["states"],
                            (r + 1) ** size, f"{dt:.3f}"])
                fh.flush()
    if fh is not sys.stdout:
        fh.close()


if __name__ == "__main__":
    main()
