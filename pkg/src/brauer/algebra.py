"""Quiver presentation and normal-form arithmetic of Brauer graph algebras.

Every half-edge ``h`` gives an arrow ``a_h`` from edge(h) to edge(rho h). A
*chain* ``(h, l)`` is the arrow sequence ``a_h, a_{rho h}, ...`` of length
``l`` winding around the vertex of ``h``; it runs from edge(h) to
edge(rho^l h). Products are read right to left, so ``p * q`` means q first.

Nonzero paths are exactly the chains shorter than ``N_v = val(v) * m(v)``
plus, at each edge, the two full cycles ``(h, N)`` which are identified up
to the sign ``(-1)^weight``. Hence the basis consists of idempotents,
proper chains and one socle per edge.

Signs: the two full cycles at edge ``e`` satisfy
``C(other) = (-1)^weight(e) * C(canonical)``, where the canonical cycle winds
the endpoint of smaller vertex id (smaller half-edge for a loop).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .ribbon import BrauerError, BrauerGraph, check_brauer


class GradingError(BrauerError):
    """Arrow degrees or edge weights fail the admissibility conditions."""


class Arrow(NamedTuple):
    half_edge: int
    source: int
    target: int


class Chain(NamedTuple):
    """Word ``a_h, a_{rho h}, ..., a_{rho^{l-1} h}`` in traversal order."""

    half_edge: int
    length: int


@dataclass(frozen=True)
class CommutationRelation:
    """``left - sign * right`` with both cycles starting and ending at ``edge``."""

    edge: int
    left: Chain
    sign: int
    right: Chain


@dataclass(frozen=True)
class QuiverPresentation:
    quiver_vertices: tuple[int, ...]
    arrows: tuple[Arrow, ...]
    pi: tuple[int, ...]
    zero_relations: tuple[tuple[int, int], ...]
    commutation_relations: tuple[CommutationRelation, ...]


IDEMPOTENT = "idempotent"
PROPER = "proper"
SOCLE = "socle"
_KIND_ORDER = {IDEMPOTENT: 0, PROPER: 1, SOCLE: 2}


class PathNF(NamedTuple):
    """Basis element of a Brauer graph algebra.

    For a socle, ``half_edge`` is the start of the canonical representative
    cycle and ``length`` equals ``N`` of its vertex.
    """

    kind: str
    source: int
    target: int
    half_edge: int | None = None
    length: int = 0
    vertex: int | None = None
    degree: int = 0

    @property
    def chain(self) -> Chain | None:
        if self.kind == IDEMPOTENT:
            return None
        return Chain(self.half_edge, self.length)

    def sort_key(self):
        return (
            _KIND_ORDER[self.kind],
            self.source,
            self.target,
            -1 if self.half_edge is None else self.half_edge,
            self.length,
        )


def chain_word(bg: BrauerGraph, c: Chain) -> tuple[int, ...]:
    """Half-edges of the arrows of ``c`` in traversal order."""
    rho = bg.graph.rho
    out = []
    h = c.half_edge
    for _ in range(c.length):
        out.append(h)
        h = rho[h]
    return tuple(out)


def format_word(word) -> str:
    """Product notation, last traversed arrow first: ``(1, 2)`` -> ``a2 a1``."""
    return " ".join(f"a{h}" for h in reversed(word)) if word else "1"


def cycle_length(bg: BrauerGraph, v: int) -> int:
    return bg.graph.valency(v) * bg.multiplicity[v]


def build_quiver(bg: BrauerGraph) -> QuiverPresentation:
    check_brauer(bg)
    g = bg.graph
    arrows = tuple(Arrow(h, g.edge_of[h], g.edge_of[g.rho[h]]) for h in range(g.half_edge_count))
    pi = g.rho_inverse
    zero = []
    for beta in arrows:
        for alpha in arrows:
            if alpha.source == beta.target and pi[alpha.half_edge] != beta.half_edge:
                zero.append((alpha.half_edge, beta.half_edge))
    comm = []
    for e, (h, k) in enumerate(g.edges):
        left = Chain(h, cycle_length(bg, g.vertex_of[h]))
        right = Chain(k, cycle_length(bg, g.vertex_of[k]))
        comm.append(CommutationRelation(e, left, (-1) ** (bg.edge_weight[e] % 2), right))
    return QuiverPresentation(
        tuple(range(g.num_edges)), arrows, tuple(pi), tuple(sorted(zero)), tuple(comm)
    )


def chain_degree(bg: BrauerGraph, c: Chain) -> int:
    deg = bg.arrow_degree
    return sum(deg[h] for h in chain_word(bg, c))


def check_grading_admissible(bg: BrauerGraph) -> list[str]:
    """Violations of the homogeneity (A1) and parity (A2) conditions.

    (A1) every full turn around a vertex has degree 0.
    (A2) on every cycle of the graph the corner paths and the edge weights
    have the same total parity. With a reference half-edge per vertex, the
    corner parity from ``h_in`` to ``h_out`` is ``D(h_out) - D(h_in)`` where
    ``D`` is the prefix degree around the vertex; so (A2) asks that
    ``t(e) = D(h) + D(iota h) + weight(e)`` be a coboundary mod 2. This is
    tested edge by edge against potentials grown along a BFS spanning tree,
    i.e. once per fundamental cycle.
    """
    check_brauer(bg)
    g = bg.graph
    out = []
    for v, cyc in enumerate(g.vertices):
        total = sum(bg.arrow_degree[h] for h in cyc)
        if total:
            out.append(f"A1: arrow degrees at vertex {v} sum to {total}")
    prefix = [0] * g.half_edge_count
    for cyc in g.vertices:
        acc = 0
        for h in cyc:
            prefix[h] = acc
            acc += bg.arrow_degree[h]
    twist = [
        (prefix[h] + prefix[k] + bg.edge_weight[e]) % 2 for e, (h, k) in enumerate(g.edges)
    ]
    potential = {0: 0}
    tree_edges = set()
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for h in g.vertices[v]:
            w = g.vertex_of[g.iota[h]]
            if w not in potential:
                potential[w] = (potential[v] + twist[g.edge_of[h]]) % 2
                tree_edges.add(g.edge_of[h])
                queue.append(w)
    for e, (h, k) in enumerate(g.edges):
        if e in tree_edges:
            continue
        u, w = g.vertex_of[h], g.vertex_of[k]
        if (potential[u] + potential[w] + twist[e]) % 2:
            out.append(f"A2: parity mismatch on the fundamental cycle of edge {e}")
    return out


class _Structure:
    """Basis and lookup tables of one Brauer graph algebra."""

    def __init__(self, bg: BrauerGraph):
        check_brauer(bg)
        problems = check_grading_admissible(bg)
        if problems:
            raise GradingError("inadmissible grading: " + "; ".join(problems))
        g = bg.graph
        self.bg = bg
        self.N = tuple(cycle_length(bg, v) for v in range(g.num_vertices))
        self.canonical = []
        for h, k in g.edges:
            self.canonical.append(h if g.vertex_of[h] <= g.vertex_of[k] else k)
        idem = [PathNF(IDEMPOTENT, e, e) for e in range(g.num_edges)]
        self.proper = {}
        for h in range(g.half_edge_count):
            v = g.vertex_of[h]
            k, deg = h, 0
            for length in range(1, self.N[v]):
                deg += bg.arrow_degree[k]
                k = g.rho[k]
                self.proper[(h, length)] = PathNF(PROPER, g.edge_of[h], g.edge_of[k], h, length, v, deg)
        proper = list(self.proper.values())
        socles = []
        for e, h in enumerate(self.canonical):
            v = g.vertex_of[h]
            c = Chain(h, self.N[v])
            socles.append(PathNF(SOCLE, e, e, h, self.N[v], v, chain_degree(bg, c)))
        self.socles = socles
        self.basis = tuple(sorted(idem + proper + socles, key=PathNF.sort_key))
        self.members = frozenset(self.basis)
        self.idempotents = idem

    def normal_form(self, c: Chain) -> tuple[int, PathNF] | None:
        g = self.bg.graph
        h, length = c
        n = self.N[g.vertex_of[h]]
        if length == 0:
            return 1, self.idempotents[g.edge_of[h]]
        if length < n:
            return 1, self.proper[(h, length)]
        if length > n:
            return None
        e = g.edge_of[h]
        sign = 1 if h == self.canonical[e] else (-1) ** (self.bg.edge_weight[e] % 2)
        return sign, self.socles[e]


@lru_cache(maxsize=256)
def _structure(bg: BrauerGraph) -> _Structure:
    return _Structure(bg)


def path_basis(bg: BrauerGraph) -> list[PathNF]:
    return list(_structure(bg).basis)


def normal_form(bg: BrauerGraph, c: Chain) -> tuple[int, PathNF] | None:
    """Reduce a chain to ``(sign, basis element)``; None if it vanishes."""
    return _structure(bg).normal_form(Chain(*c))


def socle(bg: BrauerGraph, edge: int) -> PathNF:
    return _structure(bg).socles[edge]


def idempotent(bg: BrauerGraph, edge: int) -> PathNF:
    return _structure(bg).idempotents[edge]


def multiply(bg: BrauerGraph, p: PathNF, q: PathNF) -> tuple[int, PathNF] | None:
    """Product ``p * q`` (q first) as ``(sign, basis element)`` or None for zero."""
    st = _structure(bg)
    for x in (p, q):
        if x not in st.members:
            raise BrauerError(f"{x} is not a basis element of this algebra")
    if q.target != p.source:
        return None
    if q.kind == IDEMPOTENT:
        return 1, p
    if p.kind == IDEMPOTENT:
        return 1, q
    if p.kind == SOCLE or q.kind == SOCLE:
        return None
    if _continues(bg, q, p):
        return st.normal_form(Chain(q.half_edge, q.length + p.length))
    return None


def _continues(bg: BrauerGraph, first: PathNF, second: PathNF) -> bool:
    """Whether ``second`` picks up the winding where ``first`` stops."""
    return bg.graph.rho_power(first.half_edge, first.length) == second.half_edge


def degree(bg: BrauerGraph, p: PathNF) -> int:
    return p.degree


def dimension(bg: BrauerGraph) -> int:
    return len(_structure(bg).basis)


def hom_dimension(bg: BrauerGraph, x: int, y: int) -> int:
    """Number of basis paths from edge ``x`` to edge ``y``."""
    return sum(1 for p in _structure(bg).basis if p.source == x and p.target == y)


def hom_matrix(bg: BrauerGraph) -> list[list[int]]:
    """Entry ``[x][y]`` is the hom-dimension from edge ``x`` to edge ``y``."""
    n = bg.graph.num_edges
    mat = [[0] * n for _ in range(n)]
    for p in _structure(bg).basis:
        mat[p.source][p.target] += 1
    return mat
