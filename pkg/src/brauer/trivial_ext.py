"""Gentle algebras from cuts, their trivial extensions, and the map Phi.

Removing the arrow ``a_{chosen(v)}`` at every vertex of a multiplicity-free
Brauer graph leaves a gentle algebra ``L``. Its trivial extension
``T = L + DL`` has basis the paths ``a`` of ``L`` and functionals ``f_a`` with
``f_a : t(a) -> s(a)`` of degree ``-|a|``. We work with the associative
composition ``g o f = (-1)^{|f|} mu2(g, f)``; in it the nonzero products are

    a o b     = ab                     (concatenation, b first)
    a o f_c   = f_d                    if c = d a  (a is an initial piece of c)
    f_l o b   = (-1)^{|b|} f_m         if l = b m  (b is a final piece of l)
    f o f'    = 0

Phi sends ``a`` to itself, ``f_a`` to ``(-1)^{D(a*)} a*`` where ``a*``
completes ``a`` to the full turn, and ``f_{1_e}`` to ``(-1)^{D(C)} C`` for
either full cycle ``C`` at ``e``. Here ``D(x) = D_C(x) + D_p`` when ``x``
passes the cut arrow at ``p``, with ``D_C`` the degree traversed before the
cut arrow and ``D_p`` a vertex potential solving one parity constraint per
edge.
"""
from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import NamedTuple

from .algebra import (
    IDEMPOTENT,
    SOCLE,
    Arrow,
    Chain,
    PathNF,
    build_quiver,
    check_grading_admissible,
    cycle_length,
    multiply,
    normal_form,
    path_basis,
)
from .covers import Cut, check_cut
from .ribbon import BrauerError, BrauerGraph, check_brauer


class GentleError(BrauerError):
    pass


class DeltaInconsistencyError(BrauerError):
    pass


@dataclass(frozen=True)
class GentlePresentation:
    quiver_vertices: tuple[int, ...]
    arrows: tuple[Arrow, ...]
    zero_relations: tuple[tuple[int, int], ...]
    degrees: tuple[int, ...]

    def degree_of(self, arrow: int) -> int:
        return self.degrees[self._slot[arrow]]

    @cached_property
    def _slot(self) -> dict[int, int]:
        return {a.half_edge: i for i, a in enumerate(self.arrows)}

    @cached_property
    def zero_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.zero_relations)


class LPath(NamedTuple):
    """Path of a gentle algebra; ``word`` lists arrows in traversal order."""

    source: int
    target: int
    word: tuple[int, ...]


def check_gentle(lam: GentlePresentation) -> list[str]:
    """Gentleness and finite-dimensionality violations of a presentation."""
    out = []
    zero = set(lam.zero_relations)
    outgoing, incoming = defaultdict(list), defaultdict(list)
    for a in lam.arrows:
        outgoing[a.source].append(a)
        incoming[a.target].append(a)
    for x in lam.quiver_vertices:
        if len(outgoing[x]) > 2:
            out.append(f"vertex {x} has {len(outgoing[x])} outgoing arrows")
        if len(incoming[x]) > 2:
            out.append(f"vertex {x} has {len(incoming[x])} incoming arrows")
    for b in lam.arrows:
        after = outgoing[b.target]
        killing = [a for a in after if (a.half_edge, b.half_edge) in zero]
        living = [a for a in after if (a.half_edge, b.half_edge) not in zero]
        if len(killing) > 1 or len(living) > 1:
            out.append(f"arrow {b.half_edge} has too many successors of one kind")
        before = incoming[b.source]
        killing = [c for c in before if (b.half_edge, c.half_edge) in zero]
        living = [c for c in before if (b.half_edge, c.half_edge) not in zero]
        if len(killing) > 1 or len(living) > 1:
            out.append(f"arrow {b.half_edge} has too many predecessors of one kind")
    if not out and _has_infinite_path(lam, zero, outgoing):
        out.append("infinite-dimensional: some path never meets a relation")
    return out


def _has_infinite_path(lam, zero, outgoing) -> bool:
    nxt = {
        b.half_edge: [a.half_edge for a in outgoing[b.target] if (a.half_edge, b.half_edge) not in zero]
        for b in lam.arrows
    }
    state = {}

    def visit(a) -> bool:
        state[a] = 1
        for c in nxt[a]:
            if state.get(c) == 1 or (c not in state and visit(c)):
                return True
        state[a] = 2
        return False

    return any(a not in state and visit(a) for a in nxt)


def gentle_from_cut(bg: BrauerGraph, cut: Cut) -> GentlePresentation:
    check_brauer(bg)
    if any(m != 1 for m in bg.multiplicity):
        raise GentleError("gentle extraction requires trivial multiplicities")
    problems = check_grading_admissible(bg)
    if problems:
        raise GentleError("inadmissible grading: " + "; ".join(problems))
    check_cut(bg.graph, cut)
    q = build_quiver(bg)
    removed = cut.arrows()
    arrows = tuple(a for a in q.arrows if a.half_edge not in removed)
    zero = tuple(
        (a, b) for a, b in q.zero_relations if a not in removed and b not in removed
    )
    lam = GentlePresentation(
        q.quiver_vertices, arrows, zero, tuple(bg.arrow_degree[a.half_edge] for a in arrows)
    )
    problems = check_gentle(lam)
    if problems:
        raise GentleError("cut algebra is not gentle: " + "; ".join(problems))
    return lam


def gentle_paths(lam: GentlePresentation) -> list[LPath]:
    """All nonzero paths, trivial ones first, then by length and word."""
    zero = set(lam.zero_relations)
    if _has_infinite_path(lam, zero, _outgoing(lam)):
        raise GentleError("infinite-dimensional presentation")
    by_source = _outgoing(lam)
    paths = [LPath(x, x, ()) for x in lam.quiver_vertices]
    frontier = [LPath(a.source, a.target, (a.half_edge,)) for a in lam.arrows]
    while frontier:
        paths.extend(frontier)
        grown = []
        for p in frontier:
            for a in by_source[p.target]:
                if (a.half_edge, p.word[-1]) not in zero:
                    grown.append(LPath(p.source, a.target, p.word + (a.half_edge,)))
        frontier = grown
    return paths


def _outgoing(lam):
    out = defaultdict(list)
    for a in lam.arrows:
        out[a.source].append(a)
    return out


def path_degree(lam: GentlePresentation, p: LPath) -> int:
    return sum(lam.degree_of(a) for a in p.word)


class TElement(NamedTuple):
    """Basis element of the trivial extension: a path or its dual functional."""

    dual: bool
    path: LPath

    @property
    def source(self) -> int:
        return self.path.target if self.dual else self.path.source

    @property
    def target(self) -> int:
        return self.path.source if self.dual else self.path.target


def element_name(x: TElement) -> str:
    p = x.path
    core = " ".join(f"a{h}" for h in reversed(p.word)) if p.word else f"1_{p.source}"
    return f"f({core})" if x.dual else core


@dataclass(frozen=True)
class TrivExtTable:
    """Basis of ``L + DL`` and every nonzero product ``basis[i] o basis[j]``."""

    presentation: GentlePresentation
    basis: tuple[TElement, ...]
    degrees: tuple[int, ...]
    products: dict[tuple[int, int], tuple[int, int]] = field(compare=False)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def compose(self, i: int, j: int) -> tuple[int, int] | None:
        return self.products.get((i, j))


def compose_rule(lam: GentlePresentation, x: TElement, y: TElement) -> tuple[int, TElement] | None:
    """``x o y`` (y first) straight from the product rules."""
    if y.target != x.source:
        return None
    if x.dual and y.dual:
        return None
    zero = lam.zero_set
    if not x.dual and not y.dual:
        a, b = x.path, y.path
        if a.word and b.word and (a.word[0], b.word[-1]) in zero:
            return None
        return 1, TElement(False, LPath(b.source, a.target, b.word + a.word))
    if not x.dual:
        a, c = x.path, y.path
        k = len(a.word)
        if a.source != c.source or c.word[:k] != a.word:
            return None
        return 1, TElement(True, LPath(a.target, c.target, c.word[k:]))
    l, b = x.path, y.path
    k = len(b.word)
    if b.target != l.target or (k and l.word[len(l.word) - k:] != b.word):
        return None
    m = LPath(l.source, b.source, l.word[: len(l.word) - k])
    return (-1) ** (path_degree(lam, b) % 2), TElement(True, m)


def build_trivial_extension(lam: GentlePresentation) -> TrivExtTable:
    paths = gentle_paths(lam)
    basis = tuple([TElement(False, p) for p in paths] + [TElement(True, p) for p in paths])
    index = {x: i for i, x in enumerate(basis)}
    degrees = tuple(
        -path_degree(lam, x.path) if x.dual else path_degree(lam, x.path) for x in basis
    )
    zero = set(lam.zero_relations)
    starting = defaultdict(list)
    for p in paths:
        starting[(p.source, p.word[0] if p.word else None)].append(p)
    by_source = defaultdict(list)
    for p in paths:
        by_source[p.source].append(p)
    products: dict[tuple[int, int], tuple[int, int]] = {}

    def put(x, y, res):
        if res is not None:
            sign, z = res
            products[(index[x], index[y])] = (sign, index[z])

    for b in paths:
        y = TElement(False, b)
        if b.word:
            partners = [LPath(b.target, b.target, ())]
            for a in lam.arrows:
                if a.source == b.target and (a.half_edge, b.word[-1]) not in zero:
                    partners += starting[(b.target, a.half_edge)]
        else:
            partners = by_source[b.target]
        for a in partners:
            put(TElement(False, a), y, compose_rule(lam, TElement(False, a), y))
    for c in paths:
        fc = TElement(True, c)
        for k in range(len(c.word) + 1):
            head = c.word[:k]
            target = c.source if k == 0 else _target_of(lam, head[-1])
            a = TElement(False, LPath(c.source, target, head))
            put(a, fc, compose_rule(lam, a, fc))
            tail = c.word[len(c.word) - k:]
            source = c.target if k == 0 else _source_of(lam, tail[0])
            b = TElement(False, LPath(source, c.target, tail))
            put(fc, b, compose_rule(lam, fc, b))
    return TrivExtTable(lam, basis, degrees, products)


def _target_of(lam, arrow):
    return next(a.target for a in lam.arrows if a.half_edge == arrow)


def _source_of(lam, arrow):
    return next(a.source for a in lam.arrows if a.half_edge == arrow)


def complement(bg: BrauerGraph, p: PathNF):
    """The path completing ``p`` to a full turn around its vertex.

    Proper paths map to proper paths and socles to the idempotent at their
    edge. An idempotent has two completions, the full cycles at both ends
    of its edge; they are returned as a pair of chains.
    """
    g = bg.graph
    if p.kind == IDEMPOTENT:
        h, k = g.edges[p.source]
        return (
            Chain(h, cycle_length(bg, g.vertex_of[h])),
            Chain(k, cycle_length(bg, g.vertex_of[k])),
        )
    if p.kind == SOCLE:
        return normal_form(bg, Chain(p.half_edge, 0))[1]
    n = cycle_length(bg, p.vertex)
    res = normal_form(bg, Chain(g.rho_power(p.half_edge, p.length), n - p.length))
    if res is None:
        raise BrauerError("complement of a zero path")
    return res[1]


def delta_C(bg: BrauerGraph, cut: Cut, c: Chain) -> int:
    """Degree traversed before the cut arrow of the chain's vertex, else 0."""
    g = bg.graph
    c = Chain(*c)
    cut_arrow = cut.chosen[g.vertex_of[c.half_edge]]
    h, acc, hits, value = c.half_edge, 0, 0, 0
    for _ in range(c.length):
        if h == cut_arrow:
            hits += 1
            value = acc
        acc += bg.arrow_degree[h]
        h = g.rho[h]
    if hits > 1:
        raise BrauerError("chain passes the cut arrow more than once")
    return value


@dataclass(frozen=True)
class DeltaData:
    cut: Cut
    delta_p: tuple[int, ...]

    def delta(self, bg: BrauerGraph, c: Chain) -> int:
        """``D_C(c)`` plus the vertex potential when ``c`` passes the cut arrow."""
        g = bg.graph
        c = Chain(*c)
        v = g.vertex_of[c.half_edge]
        cut_arrow = self.cut.chosen[v]
        passes = any(
            g.rho_power(c.half_edge, i) == cut_arrow for i in range(min(c.length, g.valency(v)))
        )
        return delta_C(bg, self.cut, c) + (self.delta_p[v] if passes else 0)


def _edge_twist(bg: BrauerGraph, cut: Cut, e: int) -> int:
    g = bg.graph
    h, k = g.edges[e]
    left = delta_C(bg, cut, Chain(h, cycle_length(bg, g.vertex_of[h])))
    right = delta_C(bg, cut, Chain(k, cycle_length(bg, g.vertex_of[k])))
    return (left + right + bg.edge_weight[e]) % 2


def solve_delta_p(bg: BrauerGraph, cut: Cut, root: int = 0, order=None) -> DeltaData:
    """Vertex potentials with ``D_q = D_p + twist(e) mod 2`` across every edge.

    Solved along a BFS tree from ``root`` (potential 0) and checked on every
    remaining edge. ``order`` optionally permutes the half-edges scanned at
    each vertex, giving a different spanning tree.
    """
    check_brauer(bg)
    if any(m != 1 for m in bg.multiplicity):
        raise GentleError("sign potentials require trivial multiplicities")
    g = bg.graph
    check_cut(g, cut)
    twist = [_edge_twist(bg, cut, e) for e in range(g.num_edges)]
    pot = {root: 0}
    tree = set()
    queue = deque([root])
    while queue:
        v = queue.popleft()
        scan = g.vertices[v] if order is None else sorted(g.vertices[v], key=order.__getitem__)
        for h in scan:
            w = g.vertex_of[g.iota[h]]
            if w not in pot:
                pot[w] = (pot[v] + twist[g.edge_of[h]]) % 2
                tree.add(g.edge_of[h])
                queue.append(w)
    for e, (h, k) in enumerate(g.edges):
        if e not in tree and (pot[g.vertex_of[h]] + pot[g.vertex_of[k]] + twist[e]) % 2:
            raise DeltaInconsistencyError(
                f"grading violates the winding parity condition at edge {e}"
            )
    return DeltaData(cut, tuple(pot[v] for v in range(g.num_vertices)))


def _to_chain(p: LPath) -> Chain:
    return Chain(p.word[0], len(p.word))


def phi_map(bg: BrauerGraph, cut: Cut, table: TrivExtTable, delta: DeltaData):
    """Image ``(sign, PathNF)`` of every basis element of the trivial extension."""
    g = bg.graph
    out = []
    for x in table.basis:
        p = x.path
        if not x.dual:
            nf = normal_form(bg, _to_chain(p)) if p.word else normal_form(bg, Chain(g.edges[p.source][0], 0))
            out.append(nf)
            continue
        if p.word:
            n = cycle_length(bg, g.vertex_of[p.word[0]])
            star = Chain(g.rho_power(p.word[0], len(p.word)), n - len(p.word))
        else:
            h = g.edges[p.source][0]
            star = Chain(h, cycle_length(bg, g.vertex_of[h]))
        sign, nf = normal_form(bg, star)
        out.append(((-1) ** (delta.delta(bg, star) % 2) * sign, nf))
    return out


@dataclass
class PhiReport:
    passed: bool
    dim_trivial_extension: int
    dim_brauer: int
    mapping: dict[str, tuple[int, PathNF]]
    failures: list[str]
    pairs_checked: int
    method: str


@lru_cache(maxsize=64)
def _nonzero_product_count(bg: BrauerGraph) -> int:
    basis = path_basis(bg)
    by_source = defaultdict(list)
    for p in basis:
        by_source[p.source].append(p)
    return sum(1 for q in basis for p in by_source[q.target] if multiply(bg, p, q) is not None)


def verify_phi(
    bg: BrauerGraph, cut: Cut, delta: DeltaData | None = None, exhaustive: bool = False
) -> PhiReport:
    """Check that Phi is a degree-preserving algebra isomorphism.

    With ``exhaustive`` every ordered pair of basis elements is compared.
    Otherwise every nonzero product of the trivial extension is compared and
    the number of nonzero products on both sides must agree; since Phi is a
    signed bijection of bases this accounts for all remaining pairs.
    """
    lam = gentle_from_cut(bg, cut)
    table = build_trivial_extension(lam)
    if delta is None:
        delta = solve_delta_p(bg, cut)
    images = phi_map(bg, cut, table, delta)
    dim_b = len(path_basis(bg))
    failures = []
    targets = [nf for _, nf in images]
    if len(set(targets)) != len(targets) or len(targets) != dim_b:
        failures.append("Phi is not a bijection of bases")
    for x, deg, (_, nf) in zip(table.basis, table.degrees, images):
        if nf.degree != deg:
            failures.append(f"degree of {element_name(x)} is {deg} but its image has {nf.degree}")
        if nf.source != x.source or nf.target != x.target:
            failures.append(f"image of {element_name(x)} has wrong endpoints")

    def check(i, j):
        expected = table.compose(i, j)
        (s1, p), (s2, q) = images[i], images[j]
        got = multiply(bg, p, q)
        if expected is None:
            if got is not None:
                failures.append(f"{element_name(table.basis[i])} o {element_name(table.basis[j])} is 0 but the image is not")
            return
        sign, k = expected
        want = (sign * images[k][0], images[k][1])
        have = None if got is None else (s1 * s2 * got[0], got[1])
        if have != want:
            failures.append(f"{element_name(table.basis[i])} o {element_name(table.basis[j])} maps wrongly")

    n = table.dimension
    if exhaustive:
        pairs = [(i, j) for i in range(n) for j in range(n)]
    else:
        pairs = list(table.products)
    for i, j in pairs:
        check(i, j)
    if not exhaustive:
        ungraded = BrauerGraph(bg.graph, bg.multiplicity)
        if len(table.products) != _nonzero_product_count(ungraded):
            failures.append(
                f"{len(table.products)} nonzero products in the trivial extension, "
                f"{_nonzero_product_count(ungraded)} in the Brauer graph algebra"
            )
    mapping = {element_name(x): img for x, img in zip(table.basis, images)}
    return PhiReport(
        passed=not failures,
        dim_trivial_extension=n,
        dim_brauer=dim_b,
        mapping=mapping,
        failures=failures,
        pairs_checked=len(pairs),
        method="all pairs" if exhaustive else "nonzero products and counts",
    )
