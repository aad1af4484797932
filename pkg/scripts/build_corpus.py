"""Write a seeded corpus of generated instances plus a bench suite CSV that lists them."""

import argparse
import csv
from pathlib import Path

from grouped_domination import generators as gen


def instances(count: int, seed: int):
    for i in range(count):
        s = seed + i
        g, c = gen.random_split_source(2 + i % 3, 2 + (i // 3) % 3, 0.4, s)
        r, k = 1 + i % 3, 1 + i % 2
        yield f"split-k-{i}", gen.gen_split_k_copies(g, c, r, k, seed=s)
        yield f"split-r-{i}", gen.gen_split_r_copies(g, c, r, k, seed=s)
        yield f"bip-t-{i}", gen.gen_bipartite_t_gadget(g, c, 2 + i % 2, k, seed=s)
        yield f"bip-paths-{i}", gen.gen_bipartite_paths(g, c, 2 + i % 2, k, seed=s)
        yield f"sat-{i}", gen.gen_from_3sat(gen.random_cnf(3, 4 + i % 4, 3, s), 2 + i % 2, seed=s)
        yield f"planted-vc-{i}", gen.planted_vc_instance(30, 6 + i % 5, 0.3, s)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="corpus")
    ap.add_argument("--count", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    root = Path(args.out)
    root.mkdir(parents=True, exist_ok=True)
    with open(root / "suite.csv", "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["instance", "r", "algo", "k"])
        for name, inst in instances(args.count, args.seed):
            inst.write(str(root / name))
            r = inst.r if inst.r is not None else 2
            w.writerow([f"{name}.edges", r, "auto", "" if inst.k is None else inst.k])
    print(f"wrote {root / 'suite.csv'}")


if __name__ == "__main__":
    main()
