"""Small named Brauer graphs used by tests, scripts and the CLI examples."""
from __future__ import annotations

from typing import Sequence

from .ribbon import BrauerGraph, RibbonGraph


def from_rotations(rotations: Sequence[Sequence[int]]) -> RibbonGraph:
    """Ribbon graph whose vertices have the given cyclic orders.

    Edges are the pairs ``(2i, 2i+1)``.
    """
    n = sum(len(r) for r in rotations)
    rho = [0] * n
    for cyc in rotations:
        for i, h in enumerate(cyc):
            rho[h] = cyc[(i + 1) % len(cyc)]
    iota = [h ^ 1 for h in range(n)]
    return RibbonGraph(tuple(rho), tuple(iota))


def _bg(g: RibbonGraph, multiplicity=None) -> BrauerGraph:
    if multiplicity is None:
        multiplicity = (1,) * g.num_vertices
    return BrauerGraph(g, tuple(multiplicity))


def single_edge(multiplicity=(1, 1)) -> BrauerGraph:
    return _bg(from_rotations([[0], [1]]), multiplicity)


def loop(multiplicity=(1,)) -> BrauerGraph:
    return _bg(from_rotations([[0, 1]]), multiplicity)


def path(n: int, multiplicity=None) -> BrauerGraph:
    """Line with ``n`` edges; vertices numbered left to right."""
    rots = [[0]] + [[2 * i - 1, 2 * i] for i in range(1, n)] + [[2 * n - 1]]
    return _bg(from_rotations(rots), multiplicity)


def star(n: int, multiplicity=None) -> BrauerGraph:
    """Centre (vertex 0) with ``n`` leaves."""
    rots = [[2 * i for i in range(n)]] + [[2 * i + 1] for i in range(n)]
    return _bg(from_rotations(rots), multiplicity)


def triangle(multiplicity=(1, 1, 1)) -> BrauerGraph:
    """Three-cycle with vertex cycles (0 5), (1 2), (3 4)."""
    return _bg(from_rotations([[0, 5], [1, 2], [3, 4]]), multiplicity)


def bouquet2(multiplicity=(1,)) -> BrauerGraph:
    """Two interleaved loops at one vertex: one face, genus one."""
    return _bg(RibbonGraph((2, 3, 1, 0), (1, 0, 3, 2)), multiplicity)


def theta(multiplicity=(1, 1)) -> BrauerGraph:
    """Three parallel edges with equal cyclic orders at both ends: one face."""
    return _bg(from_rotations([[0, 2, 4], [1, 3, 5]]), multiplicity)
