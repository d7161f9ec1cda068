"""Hypothesis strategies for ribbon graphs and Brauer graphs."""
import random

from hypothesis import strategies as st

from brauer.generate import random_admissible_grading, random_ribbon_graph
from brauer.ribbon import BrauerGraph, RibbonGraph


@st.composite
def ribbon_graphs(draw, min_edges=1, max_edges=6):
    """Connected ribbon graphs with shuffled labels."""
    n = draw(st.integers(min_edges, max_edges))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_ribbon_graph(random.Random(seed), n)


@st.composite
def any_ribbon_graphs(draw, max_edges=10):
    """Possibly disconnected: rho is an arbitrary permutation."""
    n = draw(st.integers(1, max_edges))
    rho = draw(st.permutations(range(2 * n)))
    iota_pairs = draw(st.permutations(range(2 * n)))
    iota = [0] * (2 * n)
    for a, b in zip(iota_pairs[::2], iota_pairs[1::2]):
        iota[a], iota[b] = b, a
    return RibbonGraph(tuple(rho), tuple(iota))


@st.composite
def brauer_graphs(draw, min_edges=1, max_edges=5, max_mult=3, graded=False):
    g = draw(ribbon_graphs(min_edges, max_edges))
    mult = tuple(draw(st.integers(1, max_mult)) for _ in range(g.num_vertices))
    bg = BrauerGraph(g, mult)
    if graded and draw(st.booleans()):
        bg = random_admissible_grading(random.Random(draw(st.integers(0, 2**32 - 1))), bg)
    return bg


@st.composite
def permutations_for(draw, n):
    return draw(st.permutations(range(n)))
