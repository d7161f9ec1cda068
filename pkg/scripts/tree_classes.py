"""Count derived-equivalence classes among Brauer trees.

For every plane tree with up to ``max_edges`` edges and one exceptional
vertex of multiplicity up to ``max_mult``, group the instances by the
decision invariants and print one line per class.
"""
import argparse
from collections import defaultdict
from dataclasses import dataclass

from brauer.generate import plane_trees
from brauer.invariants import derived_invariants
from brauer.ribbon import BrauerGraph


@dataclass
class Config:
    max_edges: int = 6
    max_mult: int = 4


def run(cfg: Config):
    classes = defaultdict(int)
    for e in range(2, cfg.max_edges + 1):
        for t in plane_trees(e):
            for v in range(t.num_vertices):
                for m in range(1, cfg.max_mult + 1):
                    mult = [1] * t.num_vertices
                    mult[v] = m
                    classes[derived_invariants(BrauerGraph(t, tuple(mult))).decision_key()] += 1
    return classes


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-edges", type=int, default=Config.max_edges)
    p.add_argument("--max-mult", type=int, default=Config.max_mult)
    a = p.parse_args()
    classes = run(Config(a.max_edges, a.max_mult))
    for key, n in sorted(classes.items()):
        v, e, f, per, mult, sigma = key
        print(f"E={e} multiplicities={list(mult)}: {n} instances")
    print(f"{len(classes)} classes")


if __name__ == "__main__":
    main()
