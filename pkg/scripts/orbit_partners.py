"""Find pairs of ribbon graphs with equal (V, E, F) and perimeters but different sigma.

Such pairs separate the line-field orbits even though the surfaces and
boundary data agree. In genus 0 none exist, since sigma is then decided by
whether some perimeter is odd.
"""
import argparse
from collections import defaultdict
from dataclasses import dataclass

from brauer.generate import connected_ribbon_graphs
from brauer.ribbon import faces, genus, sigma_bipartite


@dataclass
class Config:
    max_edges: int = 4


def run(cfg: Config):
    groups = defaultdict(lambda: defaultdict(list))
    for e in range(1, cfg.max_edges + 1):
        for g in connected_ribbon_graphs(e):
            per = tuple(sorted(faces(g).perimeters))
            groups[(g.num_vertices, e, len(per), per)][sigma_bipartite(g)].append(g)
    return {k: v for k, v in groups.items() if len(v) == 2}


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-edges", type=int, default=Config.max_edges)
    found = run(Config(p.parse_args().max_edges))
    for (v, e, f, per), by_sigma in sorted(found.items()):
        g0, g1 = by_sigma[0][0], by_sigma[1][0]
        print(f"V={v} E={e} F={f} genus={genus(g0)} perimeters={list(per)}")
        print(f"  sigma 0: rho={g0.rho} iota={g0.iota}")
        print(f"  sigma 1: rho={g1.rho} iota={g1.iota}")
    print(f"{len(found)} invariant bundles split by sigma")


if __name__ == "__main__":
    main()
