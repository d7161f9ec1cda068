"""Multiplicity-free branched covers of Brauer graphs.

Given a cut (one chosen half-edge per vertex) and ``mbar = lcm(m)``, the
cover has half-edges ``(h, g)`` with ``g`` in ``Z/mbar``, stored at index
``h * mbar + g``:

    rho(h, g)  = (rho h, g + W(h))
    iota(h, g) = (iota h, g)

where ``W(h) = mbar / m(v)`` on the chosen half-edge of ``v`` and 0 elsewhere.
Going once around ``v`` thus shifts the sheet by ``mbar / m(v)``, so each
vertex ``v`` has ``mbar / m(v)`` preimages of valency ``val(v) * m(v)`` and
multiplicity one. ``Z/mbar`` acts by ``(h, g) -> (h, g + 1)``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from .algebra import dimension, hom_dimension
from .ribbon import (
    BrauerError,
    BrauerGraph,
    RibbonGraph,
    check_brauer,
    faces,
)


class CutError(BrauerError):
    pass


class CoverError(BrauerError):
    pass


@dataclass(frozen=True)
class Cut:
    """One chosen half-edge per vertex, indexed by canonical vertex id."""

    chosen: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "chosen", tuple(int(h) for h in self.chosen))

    @classmethod
    def default(cls, g: RibbonGraph) -> "Cut":
        """The minimal half-edge at every vertex."""
        return cls(tuple(cyc[0] for cyc in g.vertices))

    def arrows(self) -> frozenset[int]:
        return frozenset(self.chosen)


def validate_cut(g: RibbonGraph, cut: Cut) -> list[str]:
    if len(cut.chosen) != g.num_vertices:
        return [f"cut names {len(cut.chosen)} half-edges for {g.num_vertices} vertices"]
    out = []
    for v, h in enumerate(cut.chosen):
        if not 0 <= h < g.half_edge_count:
            out.append(f"cut half-edge {h} out of range")
        elif g.vertex_of[h] != v:
            out.append(f"half-edge {h} is not at vertex {v}")
    return out


def check_cut(g: RibbonGraph, cut: Cut) -> None:
    problems = validate_cut(g, cut)
    if problems:
        raise CutError("invalid cut: " + "; ".join(problems))


def all_cuts(g: RibbonGraph):
    for chosen in itertools.product(*g.vertices):
        yield Cut(chosen)


@dataclass(frozen=True)
class CoverData:
    base: BrauerGraph
    cut: Cut
    mbar: int
    cover: BrauerGraph
    weight: tuple[int, ...]
    deck_generator: tuple[int, ...]
    projection: tuple[int, ...]
    vertex_labels: tuple[tuple[int, int], ...]

    def index(self, h: int, g: int) -> int:
        return h * self.mbar + g % self.mbar

    def sheet(self, x: int) -> int:
        return x % self.mbar


def build_cover(bg: BrauerGraph, cut: Cut) -> CoverData:
    check_brauer(bg)
    g = bg.graph
    check_cut(g, cut)
    mbar = math.lcm(*bg.multiplicity)
    weight = [0] * g.half_edge_count
    for v, h in enumerate(cut.chosen):
        weight[h] = (mbar // bg.multiplicity[v]) % mbar
    n = g.half_edge_count * mbar
    rho = [0] * n
    iota = [0] * n
    for h in range(g.half_edge_count):
        for s in range(mbar):
            x = h * mbar + s
            rho[x] = g.rho[h] * mbar + (s + weight[h]) % mbar
            iota[x] = g.iota[h] * mbar + s
    cg = RibbonGraph(tuple(rho), tuple(iota))
    if not cg.is_connected:
        raise CoverError("cover disconnected for this cut")
    projection = tuple(x // mbar for x in range(n))
    deck = tuple((x // mbar) * mbar + (x % mbar + 1) % mbar for x in range(n))
    labels = []
    for cyc in cg.vertices:
        v = g.vertex_of[projection[cyc[0]]]
        ref = g.vertices[v][0]
        labels.append((v, min(x % mbar for x in cyc if x // mbar == ref)))
    edge_weight = tuple(bg.edge_weight[g.edge_of[projection[h]]] for h, _ in cg.edges)
    arrow_degree = tuple(bg.arrow_degree[projection[x]] for x in range(n))
    cover = BrauerGraph(cg, (1,) * cg.num_vertices, edge_weight, arrow_degree)
    return CoverData(
        base=bg,
        cut=cut,
        mbar=mbar,
        cover=cover,
        weight=tuple(weight),
        deck_generator=deck,
        projection=projection,
        vertex_labels=tuple(labels),
    )


@dataclass
class CoverReport:
    checks: dict[str, bool] = field(default_factory=dict)
    details: dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def record(self, name: str, problems: list[str]) -> None:
        self.checks[name] = not problems
        if problems:
            self.details[name] = "; ".join(problems[:5])


def verify_cover(cd: CoverData) -> CoverReport:
    """Run the five structural checks of a branched cover."""
    base, cov = cd.base.graph, cd.cover.graph
    proj, deck, mbar = cd.projection, cd.deck_generator, cd.mbar
    n = cov.half_edge_count
    rep = CoverReport()

    problems = []
    for x in range(n):
        if proj[cov.rho[x]] != base.rho[proj[x]]:
            problems.append(f"rho not preserved at {x}")
        if proj[cov.iota[x]] != base.iota[proj[x]]:
            problems.append(f"iota not preserved at {x}")
    for cyc in cov.vertices:
        if len({base.vertex_of[proj[x]] for x in cyc}) != 1:
            problems.append(f"cover vertex of {cyc[0]} spans several base vertices")
    rep.record("morphism", problems)

    problems = []
    for x in range(n):
        if deck[cov.rho[x]] != cov.rho[deck[x]] or deck[cov.iota[x]] != cov.iota[deck[x]]:
            problems.append(f"deck generator does not commute at {x}")
    powers = [tuple(range(n))]
    for _ in range(mbar):
        powers.append(tuple(deck[y] for y in powers[-1]))
    if powers[mbar] != powers[0]:
        problems.append("deck generator does not have order dividing mbar")
    for e in range(cov.num_edges):
        orbit = {cov.edge_of[powers[k][cov.edges[e][0]]] for k in range(mbar)}
        if len(orbit) != mbar:
            problems.append(f"edge {e} has orbit of size {len(orbit)}")
    for w, stab in enumerate(vertex_stabilizer_orders(cd)):
        v = cd.vertex_labels[w][0]
        if stab != cd.base.multiplicity[v]:
            problems.append(f"cover vertex {w} has stabiliser of order {stab}")
    rep.record("deck_action", problems)

    problems = []
    for cyc in cov.vertices:
        v = base.vertex_of[proj[cyc[0]]]
        if len(cyc) != base.valency(v) * cd.base.multiplicity[v]:
            problems.append(f"cover vertex of {cyc[0]} has valency {len(cyc)}")
    rep.record("valency", problems)

    problems = []
    for face in faces(cov).faces:
        image = [proj[x] for x in face.orbit]
        d = 1
        while base.phi[image[d - 1]] != image[0]:
            d += 1
        period = []
        h = image[0]
        for _ in range(d):
            period.append(h)
            h = base.phi[h]
        if len(image) % d or image != period * (len(image) // d):
            problems.append(f"face through {face.orbit[0]} is not a periodic lift")
    rep.record("faces", problems)

    rep.record("connected", [] if cov.is_connected else ["cover is disconnected"])
    return rep


def orbit_hom_mismatches(bg: BrauerGraph, cut: Cut) -> list[str]:
    """Compare hom-dimensions in the base with sums over deck translates in the cover."""
    cd = build_cover(bg, cut)
    g, cov = bg.graph, cd.cover
    out = []
    for x in range(g.num_edges):
        xt = cov.graph.edge_of[cd.index(g.edges[x][0], 0)]
        for y in range(g.num_edges):
            hy = g.edges[y][0]
            lifted = sum(
                hom_dimension(cov, xt, cov.graph.edge_of[cd.index(hy, s)]) for s in range(cd.mbar)
            )
            base_dim = hom_dimension(bg, x, y)
            if lifted != base_dim:
                out.append(f"hom({x},{y}): base {base_dim}, cover sum {lifted}")
    big, small = dimension(cov), dimension(bg)
    if big != cd.mbar * small:
        out.append(f"cover dimension {big} != {cd.mbar} * {small}")
    return out


def orbit_hom_check(bg: BrauerGraph, cut: Cut) -> bool:
    return not orbit_hom_mismatches(bg, cut)


def fiber_sizes(cd: CoverData) -> list[int]:
    """Number of cover vertices over each base vertex."""
    counts = [0] * cd.base.graph.num_vertices
    for v, _ in cd.vertex_labels:
        counts[v] += 1
    return counts


def vertex_stabilizer_orders(cd: CoverData) -> list[int]:
    """Order of the deck-group stabiliser of each cover vertex."""
    cov = cd.cover.graph
    out = []
    for w, cyc in enumerate(cov.vertices):
        x, count = cyc[0], 0
        for _ in range(cd.mbar):
            if cov.vertex_of[x] == w:
                count += 1
            x = cd.deck_generator[x]
        out.append(count)
    return out
