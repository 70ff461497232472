#!/usr/bin/env python
"""Measure spanning-forest convergence on static topologies.

For each graph family and size, runs the token-merge process from the
all-singletons state under a uniform random scheduler over applicable rule
instances, and reports the number of relabeling steps until one tree
remains, averaged over trials.  The interesting quantity is steps/n: it
stays modest on dense graphs and grows on sparse ones (a token walking a
path needs quadratically many steps).
"""

import argparse
import random
import statistics
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from tempnet.core import StaticGraph, edge
from tempnet.simforest import run_static


def complete(n):
    names = [f"v{i}" for i in range(n)]
    return StaticGraph(frozenset(names),
                       frozenset(edge(a, b) for i, a in enumerate(names)
                                 for b in names[i + 1:]))


def star(n):
    names = [f"v{i}" for i in range(n)]
    return StaticGraph(frozenset(names),
                       frozenset(edge(names[0], x) for x in names[1:]))


def gnp(n, p, rng):
    names = [f"v{i}" for i in range(n)]
    while True:
        edges = frozenset(edge(a, b) for i, a in enumerate(names)
                          for b in names[i + 1:] if rng.random() < p)
        g = StaticGraph(frozenset(names), edges)
        if g.is_connected():
            return g


FAMILIES = {
    "complete": lambda n, rng: complete(n),
    "star": lambda n, rng: star(n),
    "gnp(0.3)": lambda n, rng: gnp(n, 0.3, rng),
}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[10, 20, 40])
    ap.add_argument("--trials", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    print(f"{'family':<12} {'n':>4} {'mean steps':>12} {'steps/n':>9} {'max':>7}")
    for name, make in FAMILIES.items():
        for n in args.sizes:
            g = make(n, rng)
            steps = [run_static(g, rng=rng) for _ in range(args.trials)]
            mean = statistics.mean(steps)
            print(f"{name:<12} {n:>4} {mean:>12.1f} {mean / n:>9.2f} {max(steps):>7}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
