import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from brauer import catalog
from brauer.algebra import (
    IDEMPOTENT,
    PROPER,
    SOCLE,
    Chain,
    GradingError,
    build_quiver,
    chain_degree,
    chain_word,
    check_grading_admissible,
    dimension,
    hom_dimension,
    hom_matrix,
    idempotent,
    multiply,
    normal_form,
    path_basis,
    socle,
)
from brauer.generate import connected_ribbon_graphs, multiplicity_patterns, random_admissible_grading
from brauer.ribbon import BrauerError, BrauerGraph
from oracles import dimension_oracle, quotient_dims
from strategies import brauer_graphs

GREEK = {1: "α", 2: "β", 5: "γ", 0: "δ", 3: "ε", 4: "ζ"}


def product(word):
    """Traversal order to product notation, last arrow leftmost."""
    return "".join(GREEK[h] for h in reversed(word))


def triangle123():
    return catalog.triangle((1, 2, 3))


def test_triangle_presentation_matches_hand_derivation():
    bg = triangle123()
    q = build_quiver(bg)
    assert q.quiver_vertices == (0, 1, 2)
    assert len(q.arrows) == 6
    zero = {GREEK[a] + GREEK[b] for a, b in q.zero_relations}
    assert zero == {"εα", "δβ", "γε", "βζ", "αγ", "ζδ"}
    comm = {
        frozenset((product(chain_word(bg, r.left)), product(chain_word(bg, r.right))))
        for r in q.commutation_relations
    }
    expected = {
        frozenset(("βαβα", "γδ")),
        frozenset(("δγ", "εζεζεζ")),
        frozenset(("ζεζεζε", "αβαβ")),
    }
    assert comm == expected
    assert all(r.sign == 1 for r in q.commutation_relations)


def test_single_edge_presentation():
    q = build_quiver(catalog.single_edge())
    assert q.quiver_vertices == (0,)
    assert [(a.source, a.target) for a in q.arrows] == [(0, 0), (0, 0)]
    assert q.zero_relations == ((0, 1), (1, 0))
    (r,) = q.commutation_relations
    assert (r.left, r.sign, r.right) == (Chain(0, 1), 1, Chain(1, 1))


def test_weighted_path_flips_commutation_sign():
    bg = catalog.path(2).with_grading((1, 0), (0, 0, 0, 0))
    r = build_quiver(bg).commutation_relations[0]
    assert (r.left, r.sign, r.right) == (Chain(0, 1), -1, Chain(1, 2))
    assert build_quiver(bg).commutation_relations[1].sign == 1


def test_admissibility_examples():
    assert check_grading_admissible(catalog.triangle()) == []
    unbalanced = catalog.path(2).with_grading((0, 0), (0, 1, 0, 0))
    assert check_grading_admissible(unbalanced) == ["A1: arrow degrees at vertex 1 sum to 1"]
    twisted = catalog.triangle().with_grading((1, 0, 0), (0,) * 6)
    assert check_grading_admissible(twisted) == ["A2: parity mismatch on the fundamental cycle of edge 1"]
    with pytest.raises(GradingError):
        path_basis(twisted)


def test_path2_basis():
    bg = catalog.path(2)
    basis = path_basis(bg)
    assert len(basis) == 6
    kinds = sorted(p.kind for p in basis)
    assert kinds.count(IDEMPOTENT) == 2 and kinds.count(SOCLE) == 2 and kinds.count(PROPER) == 2
    a = normal_form(bg, Chain(1, 1))[1]
    b = normal_form(bg, Chain(2, 1))[1]
    assert (a.source, a.target, b.source, b.target) == (0, 1, 1, 0)
    assert multiply(bg, b, a) == (1, socle(bg, 0))
    assert multiply(bg, a, b) == (1, socle(bg, 1))


def test_weighted_path_product_takes_sign():
    bg = catalog.path(2).with_grading((1, 0), (0, 0, 0, 0))
    a = normal_form(bg, Chain(1, 1))[1]
    b = normal_form(bg, Chain(2, 1))[1]
    assert socle(bg, 0).half_edge == 0
    assert multiply(bg, b, a) == (-1, socle(bg, 0))
    assert multiply(bg, a, b) == (1, socle(bg, 1))


@pytest.mark.parametrize(
    "bg,dim",
    [
        (catalog.single_edge(), 2),
        (catalog.single_edge((1, 2)), 3),
        (catalog.path(2), 6),
        (triangle123(), 24),
        (catalog.theta((2, 3)), 45),
        (catalog.bouquet2((2,)), 32),
        (catalog.loop(), 4),
        (catalog.loop((2,)), 8),
    ],
)
def test_frozen_dimensions(bg, dim):
    assert dimension(bg) == dim
    g = bg.graph
    assert dim == sum(bg.multiplicity[v] * g.valency(v) ** 2 for v in range(g.num_vertices))
    assert dimension_oracle(g.rho, g.iota, bg.multiplicity) == dim


def test_hom_dimensions_sum_to_dimension():
    bg = triangle123()
    n = bg.graph.num_edges
    assert sum(hom_dimension(bg, x, y) for x in range(n) for y in range(n)) == 24
    assert hom_matrix(bg) == [[hom_dimension(bg, x, y) for y in range(n)] for x in range(n)]


def _times(bg, x, y):
    return None if x is None or y is None else _signed(multiply(bg, x[1], y[1]), x[0] * y[0])


def _signed(r, s):
    return None if r is None else (r[0] * s, r[1])


def _associative_on(bg, triples):
    for p, q, r in triples:
        left = _times(bg, _times(bg, (1, p), (1, q)), (1, r))
        right = _times(bg, (1, p), _times(bg, (1, q), (1, r)))
        if left != right:
            return (p, q, r)
    return None


def _small_cases():
    for e in (1, 2):
        for g in connected_ribbon_graphs(e):
            for m in multiplicity_patterns(g.num_vertices, (1, 2, 3)):
                yield BrauerGraph(g, m)
    for g in connected_ribbon_graphs(3):
        yield BrauerGraph(g, (1,) * g.num_vertices)
    yield triangle123()
    yield random_admissible_grading(random.Random(3), catalog.theta((2, 1)))


def test_associativity_exhaustive_on_small_graphs():
    for bg in _small_cases():
        basis = path_basis(bg)
        assert _associative_on(bg, itertools.product(basis, repeat=3)) is None, bg


@given(brauer_graphs(max_edges=5, max_mult=3, graded=True), st.data())
def test_associativity_sampled(bg, data):
    basis = path_basis(bg)
    pick = st.sampled_from(basis)
    triples = [(data.draw(pick), data.draw(pick), data.draw(pick)) for _ in range(30)]
    assert _associative_on(bg, triples) is None


@given(brauer_graphs(max_edges=4, max_mult=3, graded=True))
def test_unit_law_and_degree_additivity(bg):
    basis = path_basis(bg)
    for p in basis:
        assert multiply(bg, p, idempotent(bg, p.source)) == (1, p)
        assert multiply(bg, idempotent(bg, p.target), p) == (1, p)
    for p, q in itertools.product(basis, repeat=2):
        r = multiply(bg, p, q)
        if r is not None:
            assert r[1].degree == p.degree + q.degree
            assert (r[1].source, r[1].target) == (q.source, p.target)


@given(brauer_graphs(max_edges=5, max_mult=3, graded=True))
def test_commutation_relations_are_homogeneous(bg):
    for r in build_quiver(bg).commutation_relations:
        assert chain_degree(bg, r.left) == chain_degree(bg, r.right) == 0


@given(brauer_graphs(max_edges=4, max_mult=2, graded=True), st.integers(0, 3))
def test_even_weight_shift_keeps_structure_constants(bg, k):
    shifted = bg.with_grading(tuple(w + 2 * k * (e % 2 * 2 - 1) for e, w in enumerate(bg.edge_weight)), bg.arrow_degree)
    basis = path_basis(bg)
    assert path_basis(shifted) == basis
    for p, q in itertools.product(basis, repeat=2):
        assert multiply(bg, p, q) == multiply(shifted, p, q)


@given(brauer_graphs(max_edges=4, max_mult=2))
def test_classical_algebra_has_no_signs(bg):
    for p, q in itertools.product(path_basis(bg), repeat=2):
        r = multiply(bg, p, q)
        assert r is None or r[0] == 1


@given(brauer_graphs(max_edges=4, max_mult=2))
def test_hom_dimensions_match_rewriting_oracle(bg):
    g = bg.graph
    dims = quotient_dims(g.rho, g.iota, bg.multiplicity)
    assert {(x, y): d for x, row in enumerate(hom_matrix(bg)) for y, d in enumerate(row) if d} == dims


@given(brauer_graphs(max_edges=4, max_mult=2, graded=True))
def test_signed_dimension_matches_oracle(bg):
    g = bg.graph
    assert dimension(bg) == dimension_oracle(g.rho, g.iota, bg.multiplicity, list(bg.edge_weight))


def test_foreign_elements_rejected():
    p = idempotent(catalog.path(3), 2)
    bg = catalog.path(2)
    with pytest.raises(BrauerError):
        multiply(bg, p, path_basis(bg)[0])
    with pytest.raises(BrauerError):
        multiply(bg, path_basis(bg)[0], socle(catalog.triangle(), 0)._replace(degree=5))


def test_full_cycle_normal_forms_agree_up_to_sign():
    bg = triangle123().with_grading((0, 0, 0), (0,) * 6)
    for e, (h, k) in enumerate(bg.graph.edges):
        n_h = bg.multiplicity[bg.graph.vertex_of[h]] * bg.graph.valency(bg.graph.vertex_of[h])
        n_k = bg.multiplicity[bg.graph.vertex_of[k]] * bg.graph.valency(bg.graph.vertex_of[k])
        assert normal_form(bg, Chain(h, n_h))[1] == normal_form(bg, Chain(k, n_k))[1] == socle(bg, e)
        assert normal_form(bg, Chain(h, n_h + 1)) is None
