"""Derived-equivalence invariants of Brauer graph algebras.

Two non-local Brauer graph algebras are derived equivalent exactly when
their graphs share the vertex, edge and face counts, the multisets of face
perimeters and of multiplicities, and bipartiteness. Local algebras (one
edge) are excluded: there derived equivalence is isomorphism, which is
field dependent, so callers should use :func:`are_isomorphic` instead.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .ribbon import (
    BrauerError,
    BrauerGraph,
    RibbonGraph,
    check,
    check_brauer,
    faces,
    genus_from_counts,
    sigma_bipartite,
)


class LocalAlgebraError(BrauerError):
    pass


class SurfaceMismatchError(BrauerError):
    pass


@dataclass(frozen=True)
class DerivedInvariants:
    num_vertices: int
    num_edges: int
    num_faces: int
    perimeters: tuple[int, ...]
    multiplicities: tuple[int, ...]
    sigma: int
    genus: int
    k0_rank: int
    k0_sg_rank: int

    def as_dict(self) -> dict:
        return {
            "V": self.num_vertices,
            "E": self.num_edges,
            "F": self.num_faces,
            "perimeters": list(self.perimeters),
            "multiplicities": list(self.multiplicities),
            "sigma": self.sigma,
            "genus": self.genus,
            "k0_rank": self.k0_rank,
            "k0_sg_rank": self.k0_sg_rank,
        }

    def decision_key(self) -> tuple:
        return (
            self.num_vertices,
            self.num_edges,
            self.num_faces,
            self.perimeters,
            self.multiplicities,
            self.sigma,
        )


@dataclass(frozen=True)
class OrbitClass:
    """Invariants of the mapping-class orbit of the ribbon line field.

    ``gcd_eta`` is None in genus 0, where it carries no information.
    """

    genus: int
    perimeters: tuple[int, ...]
    sigma: int
    gcd_eta: int | None


@lru_cache(maxsize=4096)
def derived_invariants(bg: BrauerGraph) -> DerivedInvariants:
    check_brauer(bg)
    g = bg.graph
    per = tuple(sorted(faces(g).perimeters))
    v, e, f = g.num_vertices, g.num_edges, len(per)
    sigma = sigma_bipartite(g)
    return DerivedInvariants(
        num_vertices=v,
        num_edges=e,
        num_faces=f,
        perimeters=per,
        multiplicities=tuple(sorted(bg.multiplicity)),
        sigma=sigma,
        genus=genus_from_counts(v, e, f),
        k0_rank=e,
        k0_sg_rank=e - v + 1 - sigma,
    )


def _require_non_local(bg: BrauerGraph) -> None:
    if bg.graph.num_edges == 1:
        raise LocalAlgebraError(
            "local algebra: derived equivalence coincides with isomorphism; use are_isomorphic"
        )


def derived_equivalent(bg1: BrauerGraph, bg2: BrauerGraph) -> bool:
    """Decide derived equivalence; grading data is ignored."""
    check_brauer(bg1)
    check_brauer(bg2)
    _require_non_local(bg1)
    _require_non_local(bg2)
    return derived_invariants(bg1).decision_key() == derived_invariants(bg2).decision_key()


def orbit_class(bg: BrauerGraph) -> OrbitClass:
    inv = derived_invariants(bg)
    gcd = None if inv.genus == 0 else 2 - inv.sigma
    return OrbitClass(inv.genus, inv.perimeters, inv.sigma, gcd)


def orbit_equivalent(bg1: BrauerGraph, bg2: BrauerGraph) -> bool:
    """Whether the ribbon line fields lie in one mapping-class orbit."""
    a, b = derived_invariants(bg1), derived_invariants(bg2)
    if (a.num_vertices, a.num_edges, a.num_faces) != (b.num_vertices, b.num_edges, b.num_faces):
        raise SurfaceMismatchError("surfaces not homeomorphic")
    return a.perimeters == b.perimeters and (a.genus == 0 or a.sigma == b.sigma)


def poincare_hopf_check(g: RibbonGraph) -> bool:
    """Boundary winding numbers are minus the perimeters and sum to ``2 chi = -2E``."""
    check(g)
    winding = [-p for p in faces(g).perimeters]
    return sum(winding) == -2 * g.num_edges
