import random

import pytest
from hypothesis import given, settings

import naive
from conftest import colorings, random_colored
from monopart.certificate import verify_certificate
from monopart.errors import SizeError
from monopart.families import builtin
from monopart.generate import bipartite_split
from monopart.graph import BLUE, RED, ColoredCompleteGraph
from monopart.oracle import enumerate_mono_copies, min_partition_exact, min_partition_naive

CYCLES, MATCHINGS, PATHS = builtin("cycles"), builtin("matchings"), builtin("paths")


def entries(g, fam, max_n=None):
    return sorted((c.color.value, c.vertices) for c in enumerate_mono_copies(g, fam, max_n))


def test_all_red_triangle_copies():
    g = ColoredCompleteGraph.monochromatic(3, RED)
    got = entries(g, CYCLES, 3)
    assert [e for e in got if e[0] == "R"] == [("R", (0,)), ("R", (0, 1)), ("R", (0, 1, 2)), ("R", (0, 2)),
                                               ("R", (1,)), ("R", (1, 2)), ("R", (2,))]
    assert [e for e in got if e[0] == "B"] == [("B", (0,)), ("B", (1,)), ("B", (2,))]


def test_k2_singletons_both_colours():
    g = ColoredCompleteGraph.from_red_edges(2, [(0, 1)])
    assert entries(g, MATCHINGS) == [("B", (0,)), ("B", (1,)), ("R", (0,)), ("R", (0, 1)), ("R", (1,))]


def test_k3_one_red_edge_matchings():
    g = ColoredCompleteGraph.from_red_edges(3, [(0, 1)])
    got = entries(g, MATCHINGS)
    assert ("R", (0, 1, 2)) in got and ("B", (0, 1, 2)) in got
    assert min_partition_exact(g, MATCHINGS, MATCHINGS)[0] == 1


def test_all_blue_k4_cycles():
    g = ColoredCompleteGraph.monochromatic(4, BLUE)
    count, cert = min_partition_exact(g, CYCLES, CYCLES)
    assert count == 1 and cert.pieces[0].color is BLUE


def test_bipartite_split_against_set_partitions():
    g = bipartite_split(6, 3)
    assert min_partition_exact(g, CYCLES, CYCLES)[0] == min_partition_naive(g, CYCLES, CYCLES) == 1


def test_size_cap():
    g = ColoredCompleteGraph.monochromatic(13, RED)
    with pytest.raises(SizeError):
        min_partition_exact(g, CYCLES, CYCLES)
    with pytest.raises(SizeError):
        enumerate_mono_copies(g, CYCLES)


@settings(max_examples=60, deadline=None)
@given(colorings(max_n=6))
def test_branch_and_bound_matches_set_partitions(g):
    count, cert = min_partition_exact(g, MATCHINGS, CYCLES)
    col = naive.color_fn(g)
    expected = naive.min_partition(g.n, col, lambda m: MATCHINGS.member(m).edges, lambda m: CYCLES.member(m).edges)
    assert count == expected
    assert len(cert.pieces) == count
    assert verify_certificate(g, MATCHINGS, CYCLES, cert).ok


@settings(max_examples=30, deadline=None)
@given(colorings(max_n=8))
def test_bounds_and_enrichment(g):
    count = min_partition_exact(g, CYCLES, CYCLES)[0]
    assert 1 <= count <= g.n
    # every path on m vertices contains a matching on m vertices, so a path
    # partition is also a matching partition
    assert min_partition_exact(g, MATCHINGS, MATCHINGS)[0] <= min_partition_exact(g, PATHS, PATHS)[0]


def test_naive_wrapper_agrees_on_random():
    rng = random.Random(4)
    for _ in range(10):
        g = random_colored(6, 0.5, rng)
        assert min_partition_exact(g, CYCLES, MATCHINGS)[0] == min_partition_naive(g, CYCLES, MATCHINGS)
