"""Check Phi on every cut of every connected multiplicity-free Brauer graph.

Optionally adds random admissible gradings on top of the census.
"""
import argparse
import random
import time
from dataclasses import dataclass

from brauer.covers import Cut, all_cuts
from brauer.generate import connected_ribbon_graphs, random_admissible_grading, random_brauer_graph
from brauer.ribbon import BrauerGraph
from brauer.trivial_ext import verify_phi


@dataclass
class Config:
    max_edges: int = 5
    graded: int = 200
    seed: int = 0
    exhaustive: bool = False


def run(cfg: Config):
    failures = []
    counts = {}
    for e in range(1, cfg.max_edges + 1):
        n = 0
        for g in connected_ribbon_graphs(e):
            bg = BrauerGraph(g, (1,) * g.num_vertices)
            for cut in all_cuts(g):
                n += 1
                if not verify_phi(bg, cut, exhaustive=cfg.exhaustive).passed:
                    failures.append((bg, cut))
        counts[e] = n
    rng = random.Random(cfg.seed)
    for _ in range(cfg.graded):
        bg = random_admissible_grading(rng, random_brauer_graph(rng, 1, cfg.max_edges), spread=3)
        cut = Cut(tuple(rng.choice(c) for c in bg.graph.vertices))
        if not verify_phi(bg, cut, exhaustive=cfg.exhaustive).passed:
            failures.append((bg, cut))
    return counts, failures


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-edges", type=int, default=Config.max_edges)
    p.add_argument("--graded", type=int, default=Config.graded)
    p.add_argument("--seed", type=int, default=Config.seed)
    p.add_argument("--exhaustive", action="store_true")
    a = p.parse_args()
    t = time.perf_counter()
    counts, failures = run(Config(a.max_edges, a.graded, a.seed, a.exhaustive))
    for e, n in counts.items():
        print(f"{e} edges: {n} (graph, cut) pairs")
    print(f"{a.graded} graded instances; {len(failures)} failures; {time.perf_counter() - t:.1f} s")
    for bg, cut in failures[:10]:
        print("  failed:", bg, cut)


if __name__ == "__main__":
    main()
