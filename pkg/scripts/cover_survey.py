"""Survey multiplicity-free covers over every cut of a Brauer graph.

Prints, per cut, the cover's vertex, edge and face counts, its genus and
the face perimeters. Different cuts can give covers of different genus.
"""
import argparse
from dataclasses import dataclass

from brauer import catalog
from brauer.covers import all_cuts, build_cover, verify_cover
from brauer.ribbon import faces, genus
from brauer.serialize import loads


@dataclass
class Config:
    path: str | None = None  # document; the (1,2,3) triangle when absent


def run(cfg: Config):
    if cfg.path:
        with open(cfg.path, "rb") as fh:
            bg = loads(fh.read())
    else:
        bg = catalog.triangle((1, 2, 3))
    rows = []
    for cut in all_cuts(bg.graph):
        cd = build_cover(bg, cut)
        cov = cd.cover.graph
        per = sorted(faces(cov).perimeters)
        rows.append((cut.chosen, cov.num_vertices, cov.num_edges, len(per), genus(cov), per, verify_cover(cd).passed))
    return rows


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("path", nargs="?")
    rows = run(Config(p.parse_args().path))
    for chosen, v, e, f, g, per, ok in rows:
        print(f"cut {chosen}: V={v} E={e} F={f} genus={g} perimeters={per} checks={'ok' if ok else 'FAIL'}")


if __name__ == "__main__":
    main()
