"""Sweep every labelled graph up to a size and tally theorem/oracle agreement.

    python3 scripts/exhaustive_sweep.py --max-n 6
"""

import argparse
import json
import time
from collections import Counter
from dataclasses import asdict, dataclass

from idealconn.connectivity import is_ideally_connected
from idealconn.decomposition import all_kappa_clique_cuts, verify_structure_theorem
from idealconn.generators import all_graphs
from idealconn.recognizers import recognize_chordal, recognize_cograph
from idealconn.theorems import fast_ideal_chordal, fast_ideal_cograph


@dataclass
class SweepConfig:
    max_n: int = 6
    structure: bool = True


def sweep(cfg: SweepConfig) -> dict:
    tally: Counter = Counter()
    mismatches = []
    started = time.perf_counter()
    for n in range(1, cfg.max_n + 1):
        for g in all_graphs(n):
            ideal = is_ideally_connected(g).ideally_connected
            tally["graphs"] += 1
            tally["ideal"] += ideal
            if recognize_cograph(g):
                tally["cographs"] += 1
                if fast_ideal_cograph(g).ideally_connected != ideal:
                    mismatches.append(("cograph", g.n, sorted(g.edges())))
            if recognize_chordal(g):
                tally["chordal"] += 1
                if fast_ideal_chordal(g).ideally_connected != ideal:
                    mismatches.append(("chordal", g.n, sorted(g.edges())))
            if cfg.structure and g.is_connected() and not g.is_complete():
                for s in all_kappa_clique_cuts(g):
                    tally["cuts"] += 1
                    if verify_structure_theorem(g, s).overall != ideal:
                        mismatches.append(("structure", g.n, sorted(g.edges())))
    return {
        "config": asdict(cfg),
        "tally": dict(tally),
        "mismatches": mismatches,
        "seconds": round(time.perf_counter() - started, 2),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=SweepConfig.max_n)
    ap.add_argument("--no-structure", action="store_true")
    args = ap.parse_args()
    print(json.dumps(sweep(SweepConfig(args.max_n, not args.no_structure)), indent=2))


if __name__ == "__main__":
    main()
