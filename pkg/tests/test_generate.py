import pytest

import naive
from monopart.errors import PreconditionError
from monopart.generate import (
    adversarial_search, automorphism_count, bipartite_split, count_mono_copies, gen_coloring, random_coloring,
)
from monopart.params import derive_seed
from monopart.graph import BLUE, RED, complete_graph, cycle_graph, path_graph


def test_random_extremes_and_determinism():
    assert random_coloring(10, 1.0).edge_count(BLUE) == 0
    assert random_coloring(10, 0.0).edge_count(RED) == 0
    assert random_coloring(30, 0.5, 3) == random_coloring(30, 0.5, 3)
    assert random_coloring(30, 0.5, 3) != random_coloring(30, 0.5, 4)
    with pytest.raises(PreconditionError):
        random_coloring(0, 0.5)
    with pytest.raises(PreconditionError):
        random_coloring(3, 1.5)


def test_bipartite_split():
    g = bipartite_split(6, 3)
    assert g.color_graph(RED).edges == frozenset((i, j) for i in range(3) for j in range(3, 6))
    assert g.edge_count(BLUE) == 6


def test_automorphisms():
    assert automorphism_count(cycle_graph(4)) == 8
    assert automorphism_count(complete_graph(3)) == 6
    assert automorphism_count(path_graph(3)) == 2


def test_copy_count_matches_enumeration():
    for seed in range(5):
        g = random_coloring(9, 0.5, seed)
        assert count_mono_copies(g, cycle_graph(4)) == naive.count_c4(9, naive.color_fn(g))


def test_adversarial_c4_on_8_vertices():
    g, residual = adversarial_search(8, cycle_graph(4), budget=500, seed=0)
    assert residual == naive.count_c4(8, naive.color_fn(g))
    assert residual == 10  # frozen from a seeded run
    # local search only accepts non-worsening flips
    start = count_mono_copies(random_coloring(8, 0.5, derive_seed(0, "adversarial-start")), cycle_graph(4))
    assert residual <= start


def test_gen_coloring_modes():
    assert gen_coloring(5, "random", 1.0) == random_coloring(5, 1.0)
    assert gen_coloring(6, "bipartite_split", 3) == bipartite_split(6, 3)
    g = gen_coloring(7, "adversarial", (complete_graph(3), 100), seed=1)
    assert g.n == 7
    with pytest.raises(PreconditionError):
        gen_coloring(5, "spiral", 1)
    with pytest.raises(PreconditionError):
        gen_coloring(5, "adversarial", 3)
