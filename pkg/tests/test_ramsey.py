import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import naive
from conftest import random_colored
from monopart.embedding import check_embedding
from monopart.errors import BudgetError
from monopart.families import builtin
from monopart.generate import bipartite_split
from monopart.graph import BLUE, RED, complete_graph, cycle_graph
from monopart.params import PipelineParams
from monopart.ramsey import cover_most, find_mono_copy


def test_triangle_in_k6():
    rng = random.Random(5)
    K3 = complete_graph(3)
    for _ in range(50):
        g = random_colored(6, 0.5, rng)
        color, emb = find_mono_copy(g, range(6), K3, K3)
        assert check_embedding(emb, g) and emb.color is color


def test_bipartite_split_has_red_c4_no_blue_k4():
    g = bipartite_split(6, 3)
    color, emb = find_mono_copy(g, range(6), cycle_graph(4), complete_graph(4))
    assert color is RED
    assert find_mono_copy(g, range(6), complete_graph(4), complete_graph(4)) is None
    color, _ = find_mono_copy(g, range(6), complete_graph(4), complete_graph(3))
    assert color is BLUE


def test_subset_restriction():
    g = bipartite_split(6, 3)
    assert find_mono_copy(g, [0, 1, 2], cycle_graph(3), complete_graph(4)) is None


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.integers(20, 120), st.sampled_from(["1/10", "1/5", "1/2"]))
def test_cover_most_leaves_at_most_eps_n(seed, n, eps):
    rng = random.Random(seed)
    g = random_colored(n, rng.random(), rng)
    fam = builtin("cycles")
    pieces, left = cover_most(g, range(n), fam, fam, eps)
    assert len(left) <= Fraction(eps) * n
    seen = set(left)
    for p in pieces:
        assert check_embedding(p, g)
        assert seen.isdisjoint(p.mapping)
        seen.update(p.mapping)
    assert seen == set(range(n))


def test_cover_most_budget():
    g = random_colored(80, 0.5, random.Random(1))
    fam = builtin("matchings")
    with pytest.raises(BudgetError) as err:
        cover_most(g, range(80), fam, fam, Fraction(1, 80), PipelineParams(cover_ratio=Fraction(1, 64)), piece_budget=2)
    pieces, left = err.value.partial
    assert len(pieces) == 2 and left


def test_exhaustive_confirms_copy_counts():
    # every K6 colouring contains a monochromatic triangle; confirm with plain enumeration
    rng = random.Random(2)
    for _ in range(20):
        g = random_colored(6, 0.5, rng)
        col = naive.color_fn(g)
        assert any(naive.embeds(3, [(0, 1), (1, 2), (0, 2)], col, c, s)
                   for c in "RB" for s in __import__("itertools").combinations(range(6), 3))
