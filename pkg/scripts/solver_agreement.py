#!/usr/bin/env python3
"""Oracle-equivalence sweep: the branching solver against the exhaustive
one on seeded random graphs, across every bound.

Disagreements print the reproducing (seed, r) pair; the exit code is
nonzero if any occur.
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from alliancelab.alliances import AllianceInstance
from alliancelab.graphs import graph_from_edge_list
from alliancelab.solvers import solve_branching, solve_bruteforce


def random_graph(n: int, p: float, seed: int):
    rng = random.Random(seed)
    return graph_from_edge_list(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--instances", type=int, default=500)
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    t0 = time.time()
    disagreements = 0
    checked = 0
    for i in range(args.instances):
        rng = random.Random(args.seed + i)
        n = rng.randint(1, args.max_n)
        g = random_graph(n, rng.uniform(0.2, 0.7), args.seed + i + 10**6)
        for r in range(1, n + 1):
            inst = AllianceInstance(g, r=r)
            a = solve_bruteforce(inst)
            b = solve_branching(inst)
            checked += 1
            if a.status != b.status or (a.found and a.size != b.size):
                disagreements += 1
                print(f"DISAGREEMENT seed={args.seed + i} r={r}: "
                      f"brute={a.status}/{a.size} branch={b.status}/{b.size}")
    print(f"{checked} solver pairs on {args.instances} graphs, "
          f"{disagreements} disagreements, {time.time() - t0:.1f}s")
    return 1 if disagreements else 0


if __name__ == "__main__":
    sys.exit(main())
