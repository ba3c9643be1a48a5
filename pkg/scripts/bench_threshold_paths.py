"""Time closed-form threshold path systems against the flow oracle.

    python3 scripts/bench_threshold_paths.py --graphs 200 --max-n 50
"""

import argparse
import time
from dataclasses import dataclass
from itertools import combinations

from idealconn.connectivity import disjoint_paths
from idealconn.generators import random_threshold
from idealconn.theorems import threshold_disjoint_paths


@dataclass
class BenchConfig:
    graphs: int = 200
    max_n: int = 50
    seed: int = 0


def run(cfg: BenchConfig) -> None:
    graphs = [random_threshold(2 + i % (cfg.max_n - 1), cfg.seed + i) for i in range(cfg.graphs)]
    pairs = sum(g.n * (g.n - 1) // 2 for g in graphs)
    for label, fn in (("closed form", lambda g, u, v: threshold_disjoint_paths(g, u, v, check=False)),
                      ("flow", disjoint_paths)):
        started = time.perf_counter()
        for g in graphs:
            for u, v in combinations(range(g.n), 2):
                fn(g, u, v)
        elapsed = time.perf_counter() - started
        print(f"{label:12s} {pairs} pairs in {elapsed:.2f}s ({1e6 * elapsed / pairs:.1f} us/pair)")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--graphs", type=int, default=BenchConfig.graphs)
    ap.add_argument("--max-n", type=int, default=BenchConfig.max_n)
    ap.add_argument("--seed", type=int, default=BenchConfig.seed)
    args = ap.parse_args()
    run(BenchConfig(args.graphs, args.max_n, args.seed))


if __name__ == "__main__":
    main()
