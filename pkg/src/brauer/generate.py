"""Exhaustive and random generation of ribbon graphs and Brauer graph data.

Up to isomorphism, every connected ribbon graph with ``e`` edges arises from
one with ``e - 1`` edges by attaching a new leaf in some corner or by
joining two corners with a new edge: delete a leaf edge if there is one,
otherwise any edge of a cycle. Generation therefore grows level by level and
deduplicates with :func:`canonical_code`.
"""
from __future__ import annotations

import itertools
import random
from functools import lru_cache
from typing import Iterator, Sequence

from .ribbon import BrauerGraph, RibbonGraph, canonical_code, relabel


def _add_leaf(g: RibbonGraph, h: int) -> RibbonGraph:
    n = g.half_edge_count
    rho = list(g.rho) + [0, 0]
    rho[n] = rho[h]
    rho[h] = n
    rho[n + 1] = n + 1
    iota = list(g.iota) + [n + 1, n]
    return RibbonGraph(tuple(rho), tuple(iota))


def _add_chord(g: RibbonGraph, h1: int, h2: int) -> RibbonGraph:
    """Join the corner after ``h1`` to the corner after ``h2``.

    ``h2`` may be the new half-edge ``n`` itself, which places both ends in
    the same corner.
    """
    n = g.half_edge_count
    rho = list(g.rho) + [0, 0]
    rho[n] = rho[h1]
    rho[h1] = n
    rho[n + 1] = rho[h2]
    rho[h2] = n + 1
    iota = list(g.iota) + [n + 1, n]
    return RibbonGraph(tuple(rho), tuple(iota))


_BASE = (RibbonGraph((0, 1), (1, 0)), RibbonGraph((1, 0), (1, 0)))


@lru_cache(maxsize=None)
def connected_ribbon_graphs(num_edges: int) -> tuple[RibbonGraph, ...]:
    """One representative per isomorphism class of connected ribbon graphs."""
    if num_edges < 1:
        return ()
    if num_edges == 1:
        return _BASE
    found: dict[tuple, RibbonGraph] = {}
    for g in connected_ribbon_graphs(num_edges - 1):
        n = g.half_edge_count
        candidates = [_add_leaf(g, h) for h in range(n)]
        candidates += [_add_chord(g, h1, h2) for h1 in range(n) for h2 in range(n + 1)]
        for c in candidates:
            found.setdefault(canonical_code(c), c)
    return tuple(found[k] for k in sorted(found))


@lru_cache(maxsize=None)
def plane_trees(num_edges: int) -> tuple[RibbonGraph, ...]:
    """One representative per isomorphism class of plane trees."""
    if num_edges < 1:
        return ()
    if num_edges == 1:
        return _BASE[:1]
    found: dict[tuple, RibbonGraph] = {}
    for g in plane_trees(num_edges - 1):
        for h in range(g.half_edge_count):
            c = _add_leaf(g, h)
            found.setdefault(canonical_code(c), c)
    return tuple(found[k] for k in sorted(found))


def all_rotation_systems(num_edges: int, connected_only: bool = True) -> Iterator[RibbonGraph]:
    """Every rotation ``rho`` on ``2 * num_edges`` half-edges, edges ``(2i, 2i+1)``.

    This is the labelled enumeration: isomorphic graphs appear many times.
    """
    n = 2 * num_edges
    iota = tuple(h ^ 1 for h in range(n))
    for rho in itertools.permutations(range(n)):
        g = RibbonGraph(rho, iota)
        if not connected_only or g.is_connected:
            yield g


def random_ribbon_graph(rng: random.Random, num_edges: int, connected: bool = True) -> RibbonGraph:
    """Random ribbon graph with shuffled half-edge labels.

    Connected graphs are built from a random spanning tree plus extra edges
    (loops and multi-edges allowed) with random cyclic orders; otherwise
    ``rho`` is a uniform permutation.
    """
    n = 2 * num_edges
    if not connected:
        rho = list(range(n))
        rng.shuffle(rho)
        g = RibbonGraph(tuple(rho), tuple(h ^ 1 for h in range(n)))
    else:
        num_vertices = rng.randint(1, num_edges + 1)
        ends = [(rng.randrange(v), v) for v in range(1, num_vertices)]
        ends += [
            (rng.randrange(num_vertices), rng.randrange(num_vertices))
            for _ in range(num_edges - num_vertices + 1)
        ]
        at = [[] for _ in range(num_vertices)]
        for i, (u, w) in enumerate(ends):
            at[u].append(2 * i)
            at[w].append(2 * i + 1)
        rho = [0] * n
        for cyc in at:
            rng.shuffle(cyc)
            for j, h in enumerate(cyc):
                rho[h] = cyc[(j + 1) % len(cyc)]
        g = RibbonGraph(tuple(rho), tuple(h ^ 1 for h in range(n)))
    perm = list(range(n))
    rng.shuffle(perm)
    return relabel(g, perm)


def random_permutation(rng: random.Random, n: int) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


def random_brauer_graph(
    rng: random.Random, min_edges: int, max_edges: int, max_mult: int = 1
) -> BrauerGraph:
    g = random_ribbon_graph(rng, rng.randint(min_edges, max_edges))
    mult = tuple(rng.randint(1, max_mult) for _ in range(g.num_vertices))
    return BrauerGraph(g, mult)


def random_admissible_grading(
    rng: random.Random, bg: BrauerGraph, spread: int = 2
) -> BrauerGraph:
    """Attach random arrow degrees and edge weights passing both admissibility checks.

    Degrees are drawn freely except for the last half-edge at each vertex,
    which balances the vertex sum to zero. Weights are the corner parities
    corrected by a random vertex 2-colouring, plus random even offsets.
    """
    g = bg.graph
    degree = [0] * g.half_edge_count
    prefix = [0] * g.half_edge_count
    for cyc in g.vertices:
        acc = 0
        for h in cyc[:-1]:
            degree[h] = rng.randint(-spread, spread)
        degree[cyc[-1]] = -sum(degree[h] for h in cyc[:-1])
        for h in cyc:
            prefix[h] = acc
            acc += degree[h]
    colour = [rng.randint(0, 1) for _ in range(g.num_vertices)]
    weight = []
    for h, k in g.edges:
        parity = (prefix[h] + prefix[k] + colour[g.vertex_of[h]] + colour[g.vertex_of[k]]) % 2
        weight.append(parity + 2 * rng.randint(-1, 1))
    return bg.with_grading(tuple(weight), tuple(degree))


def multiplicity_patterns(num_vertices: int, values: Sequence[int]) -> Iterator[tuple[int, ...]]:
    return itertools.product(values, repeat=num_vertices)
