"""Ribbon graphs in half-edge form.

A ribbon graph on half-edges ``0 .. 2E-1`` is a pair of permutations: ``rho``
sends a half-edge to its counterclockwise successor at the common vertex and
``iota`` is the fixed-point-free involution pairing the two ends of an edge.
Vertices are the cycles of ``rho``, edges the orbits of ``iota`` and faces the
orbits of ``phi = rho . iota``.

Vertices and edges are numbered canonically by the smallest half-edge they
contain, so every derived quantity is deterministic.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Sequence


class BrauerError(ValueError):
    """Base class for all errors raised by this package."""


class ValidationError(BrauerError):
    """Input data breaks the axioms of a ribbon graph or Brauer graph."""


@dataclass(frozen=True)
class RibbonGraph:
    """Half-edge encoding of a ribbon graph.

    Construction never raises; call :func:`validate` for diagnostics. The
    cached combinatorial views below assume a valid graph.
    """

    rho: tuple[int, ...]
    iota: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rho", tuple(int(x) for x in self.rho))
        object.__setattr__(self, "iota", tuple(int(x) for x in self.iota))

    @property
    def half_edge_count(self) -> int:
        return len(self.rho)

    @cached_property
    def rho_inverse(self) -> tuple[int, ...]:
        inv = [0] * len(self.rho)
        for h, r in enumerate(self.rho):
            inv[r] = h
        return tuple(inv)

    @cached_property
    def phi(self) -> tuple[int, ...]:
        """Face permutation ``h -> rho(iota(h))``."""
        return tuple(self.rho[self.iota[h]] for h in range(len(self.rho)))

    @cached_property
    def vertices(self) -> tuple[tuple[int, ...], ...]:
        """Rho-cycles, each listed from its minimal half-edge in rho order."""
        return _cycles(self.rho)

    @cached_property
    def vertex_of(self) -> tuple[int, ...]:
        return _owner(self.vertices, len(self.rho))

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((h, self.iota[h]) for h in range(len(self.iota)) if h < self.iota[h])

    @cached_property
    def edge_of(self) -> tuple[int, ...]:
        return _owner(self.edges, len(self.iota))

    @cached_property
    def position(self) -> tuple[int, ...]:
        """Index of each half-edge inside its vertex cycle."""
        pos = [0] * len(self.rho)
        for cyc in self.vertices:
            for i, h in enumerate(cyc):
                pos[h] = i
        return tuple(pos)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.rho) // 2

    def valency(self, v: int) -> int:
        return len(self.vertices[v])

    def rho_power(self, h: int, k: int) -> int:
        cyc = self.vertices[self.vertex_of[h]]
        return cyc[(self.position[h] + k) % len(cyc)]

    @cached_property
    def is_connected(self) -> bool:
        n = len(self.rho)
        if n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            h = stack.pop()
            for k in (self.rho[h], self.iota[h], self.rho_inverse[h]):
                if k not in seen:
                    seen.add(k)
                    stack.append(k)
        return len(seen) == n


def _cycles(perm: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        h = start
        while not seen[h]:
            seen[h] = True
            cyc.append(h)
            h = perm[h]
        out.append(tuple(cyc))
    return tuple(out)


def _owner(blocks: Iterable[Sequence[int]], n: int) -> tuple[int, ...]:
    own = [0] * n
    for i, block in enumerate(blocks):
        for h in block:
            own[h] = i
    return tuple(own)


def validate(g: RibbonGraph, require_connected: bool = False) -> list[str]:
    """Return every broken ribbon-graph axiom; an empty list means valid."""
    out = []
    n = len(g.rho)
    if len(g.iota) != n:
        out.append(f"rho has length {n} but iota has length {len(g.iota)}")
        return out
    if n % 2:
        out.append(f"odd half-edge count {n}")
    for name, perm in (("rho", g.rho), ("iota", g.iota)):
        bad = [h for h, x in enumerate(perm) if not 0 <= x < n]
        if bad:
            out.append(f"{name} has out-of-range image at {bad[0]}")
    if out:
        return out
    if len(set(g.rho)) != n:
        out.append("rho not a bijection")
    for h in range(n):
        if g.iota[h] == h:
            out.append(f"iota has fixed point {h}")
        elif g.iota[g.iota[h]] != h:
            out.append(f"iota not an involution at {h}")
    if require_connected and not out and not g.is_connected:
        out.append("graph is disconnected")
    return out


def check(g: RibbonGraph, require_connected: bool = False) -> None:
    problems = validate(g, require_connected)
    if problems:
        raise ValidationError("; ".join(problems))


@dataclass(frozen=True)
class Face:
    orbit: tuple[int, ...]

    @property
    def perimeter(self) -> int:
        return len(self.orbit)


@dataclass(frozen=True)
class FaceReport:
    faces: tuple[Face, ...]

    @property
    def perimeters(self) -> tuple[int, ...]:
        return tuple(f.perimeter for f in self.faces)

    def __len__(self):
        return len(self.faces)


def faces(g: RibbonGraph) -> FaceReport:
    """Orbits of ``rho . iota``, ordered by their minimal half-edge."""
    check(g)
    return FaceReport(tuple(Face(c) for c in _cycles(g.phi)))


def genus_from_counts(num_vertices: int, num_edges: int, num_faces: int) -> int:
    twice = 2 - num_faces - num_vertices + num_edges
    if twice < 0 or twice % 2:
        raise ValidationError(
            f"counts (V,E,F)=({num_vertices},{num_edges},{num_faces}) give no orientable genus"
        )
    return twice // 2


def genus(g: RibbonGraph) -> int:
    check(g)
    if not g.is_connected:
        raise ValidationError("genus requires connected graph")
    return genus_from_counts(g.num_vertices, g.num_edges, len(_cycles(g.phi)))


def sigma_bipartite(g: RibbonGraph) -> int:
    """0 if the underlying graph is bipartite, 1 otherwise (loops are odd)."""
    check(g)
    colour: dict[int, int] = {}
    for root in range(g.num_vertices):
        if root in colour:
            continue
        colour[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for h in g.vertices[v]:
                w = g.vertex_of[g.iota[h]]
                if w not in colour:
                    colour[w] = 1 - colour[v]
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return 1
    return 0


def relabel(g: RibbonGraph, perm: Sequence[int]) -> RibbonGraph:
    """Rename half-edge ``h`` to ``perm[h]``."""
    n = len(g.rho)
    rho = [0] * n
    iota = [0] * n
    for h in range(n):
        rho[perm[h]] = perm[g.rho[h]]
        iota[perm[h]] = perm[g.iota[h]]
    return RibbonGraph(tuple(rho), tuple(iota))


def _extend(g1, g2, a, b, lab1, lab2):
    """Grow the unique morphism sending half-edge a to b; None on conflict."""
    m = {a: b}
    stack = [a]
    while stack:
        h = stack.pop()
        k = m[h]
        for p1, p2 in ((g1.rho, g2.rho), (g1.iota, g2.iota)):
            x, y = p1[h], p2[k]
            if x in m:
                if m[x] != y:
                    return None
            else:
                m[x] = y
                stack.append(x)
    if len(m) != len(g1.rho) or len(set(m.values())) != len(m):
        return None
    if lab1 is not None:
        for h, k in m.items():
            if lab1[g1.vertex_of[h]] != lab2[g2.vertex_of[k]]:
                return None
    return tuple(m[h] for h in range(len(g1.rho)))


def are_isomorphic(
    g1: RibbonGraph,
    g2: RibbonGraph,
    mult1: Sequence[int] | None = None,
    mult2: Sequence[int] | None = None,
) -> tuple[int, ...] | None:
    """Half-edge bijection commuting with rho and iota, or None.

    Vertex labels (multiplicities) are compared when given. On a connected
    graph a morphism is fixed by the image of one half-edge, so the search
    anchors half-edge 0 of ``g1`` and tries every half-edge of ``g2``.
    """
    check(g1)
    check(g2)
    if len(g1.rho) != len(g2.rho):
        return None
    if (mult1 is None) != (mult2 is None):
        raise BrauerError("give multiplicities for both graphs or for neither")
    if len(g1.rho) == 0:
        return ()
    if not (g1.is_connected and g2.is_connected):
        raise ValidationError("isomorphism search requires connected graphs")
    for b in range(len(g2.rho)):
        m = _extend(g1, g2, 0, b, mult1, mult2)
        if m is not None:
            return m
    return None


def canonical_code(g: RibbonGraph, labels: Sequence[int] | None = None) -> tuple:
    """Isomorphism-invariant code of a connected ribbon graph.

    Relabels half-edges in breadth-first order from each possible root and
    keeps the lexicographically least encoding. ``labels`` are optional
    per-vertex tags (multiplicities) folded into the code.
    """
    n = len(g.rho)
    best = None
    for root in range(n):
        order = {root: 0}
        seq = [root]
        i = 0
        while i < len(seq):
            h = seq[i]
            i += 1
            for k in (g.rho[h], g.iota[h]):
                if k not in order:
                    order[k] = len(seq)
                    seq.append(k)
        code = tuple(order[g.rho[h]] for h in seq) + tuple(order[g.iota[h]] for h in seq)
        if labels is not None:
            code += tuple(labels[g.vertex_of[h]] for h in seq)
        if best is None or code < best:
            best = code
    return (n,) + (best or ())


@dataclass(frozen=True)
class BrauerGraph:
    """Ribbon graph with vertex multiplicities and optional grading data.

    ``multiplicity`` is indexed by canonical vertex id, ``edge_weight`` by
    canonical edge id and ``arrow_degree`` by half-edge. Missing optional
    data means all zero.
    """

    graph: RibbonGraph
    multiplicity: tuple[int, ...]
    edge_weight: tuple[int, ...] = field(default=())
    arrow_degree: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "multiplicity", tuple(int(x) for x in self.multiplicity))
        ew = tuple(int(x) for x in self.edge_weight) or (0,) * (len(self.graph.rho) // 2)
        ad = tuple(int(x) for x in self.arrow_degree) or (0,) * len(self.graph.rho)
        object.__setattr__(self, "edge_weight", ew)
        object.__setattr__(self, "arrow_degree", ad)

    @classmethod
    def from_lists(cls, rho, iota, multiplicity=None, edge_weight=(), arrow_degree=()):
        g = RibbonGraph(tuple(rho), tuple(iota))
        if multiplicity is None:
            check(g)
            multiplicity = (1,) * g.num_vertices
        return cls(g, tuple(multiplicity), tuple(edge_weight), tuple(arrow_degree))

    @property
    def is_graded(self) -> bool:
        return any(self.edge_weight) or any(self.arrow_degree)

    def with_multiplicity(self, multiplicity: Sequence[int]) -> "BrauerGraph":
        return BrauerGraph(self.graph, tuple(multiplicity), self.edge_weight, self.arrow_degree)

    def with_grading(self, edge_weight=(), arrow_degree=()) -> "BrauerGraph":
        return BrauerGraph(self.graph, self.multiplicity, tuple(edge_weight), tuple(arrow_degree))


def validate_brauer(bg: BrauerGraph) -> list[str]:
    out = validate(bg.graph, require_connected=True)
    if out:
        return out
    g = bg.graph
    if len(bg.multiplicity) != g.num_vertices:
        out.append(f"multiplicity has {len(bg.multiplicity)} entries for {g.num_vertices} vertices")
    else:
        out += [f"multiplicity of vertex {v} is {m} < 1" for v, m in enumerate(bg.multiplicity) if m < 1]
    if len(bg.edge_weight) != g.num_edges:
        out.append(f"edge_weight has {len(bg.edge_weight)} entries for {g.num_edges} edges")
    if len(bg.arrow_degree) != g.half_edge_count:
        out.append(
            f"arrow_degree has {len(bg.arrow_degree)} entries for {g.half_edge_count} half-edges"
        )
    return out


@lru_cache(maxsize=4096)
def _brauer_problems(bg: BrauerGraph) -> tuple[str, ...]:
    return tuple(validate_brauer(bg))


def check_brauer(bg: BrauerGraph) -> None:
    problems = _brauer_problems(bg)
    if problems:
        raise ValidationError("; ".join(problems))


def relabel_brauer(bg: BrauerGraph, perm: Sequence[int]) -> BrauerGraph:
    """Move all data of ``bg`` along the half-edge renaming ``perm``."""
    g = bg.graph
    new = relabel(g, perm)
    mult = [0] * new.num_vertices
    for v, cyc in enumerate(g.vertices):
        mult[new.vertex_of[perm[cyc[0]]]] = bg.multiplicity[v]
    weight = [0] * new.num_edges
    for e, (h, _) in enumerate(g.edges):
        weight[new.edge_of[perm[h]]] = bg.edge_weight[e]
    degree = [0] * len(perm)
    for h in range(len(perm)):
        degree[perm[h]] = bg.arrow_degree[h]
    return BrauerGraph(new, tuple(mult), tuple(weight), tuple(degree))
