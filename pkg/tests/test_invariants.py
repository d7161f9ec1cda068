import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from brauer import catalog
from brauer.generate import connected_ribbon_graphs, random_admissible_grading
from brauer.invariants import (
    LocalAlgebraError,
    SurfaceMismatchError,
    derived_equivalent,
    derived_invariants,
    orbit_class,
    orbit_equivalent,
    poincare_hopf_check,
)
from brauer.ribbon import BrauerGraph, RibbonGraph, relabel_brauer
from strategies import any_ribbon_graphs, brauer_graphs

# genus 1, one face of perimeter 6, not bipartite: found by searching
# rotation systems on three edges
THETA_PARTNER = RibbonGraph((3, 4, 0, 5, 1, 2), (1, 0, 3, 2, 5, 4))


def test_triangle_bundle():
    d = derived_invariants(catalog.triangle((1, 2, 3))).as_dict()
    assert d == {
        "V": 3, "E": 3, "F": 2, "perimeters": [3, 3], "multiplicities": [1, 2, 3],
        "sigma": 1, "genus": 0, "k0_rank": 3, "k0_sg_rank": 0,
    }


def test_star_and_bouquet_bundles():
    s = derived_invariants(catalog.star(3))
    assert (s.num_vertices, s.num_edges, s.num_faces) == (4, 3, 1)
    assert (s.perimeters, s.multiplicities, s.sigma, s.genus) == ((6,), (1, 1, 1, 1), 0, 0)
    b = derived_invariants(catalog.bouquet2())
    assert (b.num_vertices, b.num_edges, b.num_faces, b.perimeters, b.sigma, b.genus) == (1, 2, 1, (4,), 1, 1)


def test_decision_examples():
    assert derived_equivalent(catalog.star(3), catalog.path(3))
    assert derived_equivalent(catalog.triangle((1, 2, 3)), catalog.triangle((3, 1, 2)))
    assert not derived_equivalent(catalog.path(3, (2, 1, 1, 1)), catalog.path(3))


def test_grading_is_ignored():
    bg = catalog.theta((2, 1))
    graded = random_admissible_grading(random.Random(5), bg)
    assert graded != bg and derived_equivalent(bg, graded)


@pytest.mark.parametrize("other", [catalog.loop(), catalog.single_edge(), catalog.path(2)])
def test_local_algebra_is_rejected(other):
    with pytest.raises(LocalAlgebraError, match="local algebra"):
        derived_equivalent(catalog.loop(), other)
    with pytest.raises(LocalAlgebraError, match="local algebra"):
        derived_equivalent(other, catalog.single_edge())


def test_theta_and_partner_differ_only_in_sigma():
    theta = catalog.theta()
    partner = BrauerGraph(THETA_PARTNER, (1, 1))
    a, b = derived_invariants(theta), derived_invariants(partner)
    assert (a.num_vertices, a.num_edges, a.num_faces, a.perimeters, a.genus) == (2, 3, 1, (6,), 1)
    assert (b.num_vertices, b.num_edges, b.num_faces, b.perimeters, b.genus) == (2, 3, 1, (6,), 1)
    assert (a.sigma, b.sigma) == (0, 1)
    assert not orbit_equivalent(theta, partner)
    assert not derived_equivalent(theta, partner)
    assert orbit_class(theta).gcd_eta == 2 and orbit_class(partner).gcd_eta == 1


def test_orbit_examples():
    assert orbit_equivalent(catalog.star(3), catalog.path(3))
    assert orbit_class(catalog.star(3)).gcd_eta is None
    with pytest.raises(SurfaceMismatchError, match="surfaces not homeomorphic"):
        orbit_equivalent(catalog.star(3), catalog.triangle())


def test_planar_sigma_is_determined_by_perimeters():
    # so no planar pair with equal perimeters and different sigma exists
    for e in range(1, 5):
        planar = [g for g in connected_ribbon_graphs(e) if derived_invariants(BrauerGraph(g, (1,) * g.num_vertices)).genus == 0]
        for g in planar:
            inv = derived_invariants(BrauerGraph(g, (1,) * g.num_vertices))
            assert inv.sigma == int(any(p % 2 for p in inv.perimeters))
        bgs = [BrauerGraph(g, (1,) * g.num_vertices) for g in planar]
        for x, y in itertools.combinations(bgs, 2):
            a, b = derived_invariants(x), derived_invariants(y)
            if (a.num_vertices, a.num_faces) == (b.num_vertices, b.num_faces):
                assert orbit_equivalent(x, y) == (a.perimeters == b.perimeters)


def test_poincare_hopf_examples():
    assert poincare_hopf_check(catalog.triangle().graph)
    assert poincare_hopf_check(catalog.loop().graph)


@given(any_ribbon_graphs(max_edges=10))
def test_poincare_hopf_on_random_graphs(g):
    assert poincare_hopf_check(g)


@given(brauer_graphs(max_edges=7, max_mult=4))
def test_bundle_identities(bg):
    inv = derived_invariants(bg)
    assert inv.k0_rank == inv.num_edges
    assert inv.k0_sg_rank == inv.num_edges - inv.num_vertices + 1 - inv.sigma >= 0
    assert sum(inv.perimeters) == 2 * inv.num_edges
    assert len(inv.multiplicities) == inv.num_vertices
    if any(p % 2 for p in inv.perimeters):
        assert inv.sigma == 1
    assert orbit_class(bg).gcd_eta in ((None,) if inv.genus == 0 else (2 - inv.sigma,))


@given(brauer_graphs(max_edges=7, max_mult=4), st.randoms(use_true_random=False))
def test_bundle_is_relabelling_invariant(bg, rnd):
    perm = list(range(bg.graph.half_edge_count))
    rnd.shuffle(perm)
    assert derived_invariants(relabel_brauer(bg, perm)) == derived_invariants(bg)


@given(
    brauer_graphs(min_edges=2, max_edges=4, max_mult=2),
    brauer_graphs(min_edges=2, max_edges=4, max_mult=2),
    brauer_graphs(min_edges=2, max_edges=4, max_mult=2),
)
def test_equivalence_laws(x, y, z):
    assert derived_equivalent(x, x)
    assert derived_equivalent(x, y) == derived_equivalent(y, x)
    if derived_equivalent(x, y) and derived_equivalent(y, z):
        assert derived_equivalent(x, z)
    if derived_equivalent(x, y):
        assert orbit_equivalent(x, y)
