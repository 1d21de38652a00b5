import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import colorings, random_colored
from monopart.certificate import verify_certificate
from monopart.errors import BudgetError, PreconditionError
from monopart.families import builtin, edgeless_family
from monopart.generate import random_coloring
from monopart.graph import BLUE, RED, ColoredCompleteGraph, Cylinder
from monopart.oracle import min_partition_exact
from monopart.params import PipelineParams
from monopart.pipeline import classify_good, partition, partition_bipartite

PATHS, CYCLES, MATCHINGS = builtin("paths"), builtin("cycles"), builtin("matchings")
NO_SHORTCUT = PipelineParams(shortcut_nodes=0)


def test_classify_all_red():
    g = ColoredCompleteGraph.monochromatic(9, RED)
    rep = classify_good([(0, 1, 2), (3, 4, 5), (6, 7, 8)], g, Fraction(1, 4))
    assert rep.good == frozenset(range(9)) and all(not b for b in rep.bad_classes)


def test_classify_isolated_vertex_goes_to_first_failing_part():
    # vertex 4 sits in part 1 and has no red edges at all
    red = [(u, v) for u in range(6) for v in range(u + 1, 6) if 4 not in (u, v)]
    g = ColoredCompleteGraph.from_red_edges(6, red)
    rep = classify_good([(0, 1, 2), (3, 4, 5)], g, Fraction(1, 4))
    assert rep.bad_classes[0] == frozenset({4})
    assert 4 not in rep.good


def test_classify_boundary_is_inclusive():
    # delta = 1/2 and |V_1| = 4: exactly one red neighbour reaches delta*|V_1|/2 = 1
    red = [(4, 0)] + [(u, v) for u in range(4) for v in range(u + 1, 4)]
    g = ColoredCompleteGraph.from_red_edges(8, red + [(u, v) for u in range(4) for v in range(5, 8)]
                                            + [(u, v) for u in range(4, 8) for v in range(u + 1, 8)])
    rep = classify_good(Cylinder(((0, 1, 2, 3), (4, 5, 6, 7)), RED), g, Fraction(1, 2))
    assert 4 in rep.good
    g2 = ColoredCompleteGraph.from_red_edges(8, [e for e in g.color_graph(RED).edges if e != (0, 4)])
    rep2 = classify_good(Cylinder(((0, 1, 2, 3), (4, 5, 6, 7)), RED), g2, Fraction(1, 2))
    assert 4 in rep2.bad_classes[0]


def test_single_vertex():
    g = ColoredCompleteGraph.monochromatic(1, RED)
    cert = partition(g, CYCLES, PATHS)
    assert len(cert.pieces) == 1 and cert.pieces[0].n == 1


def test_all_red_k50_is_one_cycle():
    g = ColoredCompleteGraph.monochromatic(50, RED)
    cert = partition(g, CYCLES, CYCLES)
    assert len(cert.pieces) == 1 and cert.pieces[0].color is RED and cert.pieces[0].n == 50


def test_seeded_n150_cycles():
    g = random_coloring(150, 0.5, 0)
    cert = partition(g, CYCLES, CYCLES)
    assert verify_certificate(g, CYCLES, CYCLES, cert).ok
    assert len(cert.pieces) == 1  # frozen: a spanning monochromatic cycle exists and is found


@pytest.mark.parametrize("n,p", [(60, 0.5), (100, 0.3), (150, 0.8)])
@pytest.mark.parametrize("fam", [PATHS, CYCLES, builtin("cycle_power", 2)], ids=lambda f: f.name)
def test_absorbing_path_is_valid(n, p, fam):
    g = random_coloring(n, p, n)
    cert = partition(g, fam, fam, NO_SHORTCUT)
    assert verify_certificate(g, fam, fam, cert).ok
    assert "spanning copy" not in cert.notes["events"] or len(cert.pieces) > 1


def test_gluing_is_exercised():
    g = random_coloring(150, 0.6, 2)
    cert = partition(g, PATHS, PATHS, NO_SHORTCUT.with_(delta=Fraction(9, 10), seed=2))
    assert verify_certificate(g, PATHS, PATHS, cert).ok
    assert cert.notes["events"].get("glued", 0) > 0


def test_independent_family_is_one_piece():
    g = random_coloring(30, 0.5, 1)
    ind = edgeless_family("dots")
    cert = partition(g, CYCLES, ind, NO_SHORTCUT)
    assert len(cert.pieces) == 1 and cert.pieces[0].family == "dots"


def test_budget_error_carries_partial():
    g = random_coloring(200, 0.5, 1)
    with pytest.raises(BudgetError) as err:
        partition(g, CYCLES, CYCLES, NO_SHORTCUT.with_(piece_budget=3))
    assert err.value.partial is not None and len(err.value.partial.pieces) <= 4


@settings(max_examples=40, deadline=None)
@given(colorings(max_n=9), st.sampled_from([(CYCLES, MATCHINGS), (PATHS, CYCLES), (MATCHINGS, MATCHINGS)]))
def test_never_beats_the_oracle(g, fams):
    f1, f2 = fams
    cert = partition(g, f1, f2)
    assert verify_certificate(g, f1, f2, cert).ok
    assert len(cert.pieces) >= min_partition_exact(g, f1, f2)[0]


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([3, 9, 40, 90]), st.booleans())
def test_role_symmetry(seed, n, shortcut):
    g = random_colored(n, 0.5, random.Random(seed))
    params = PipelineParams(seed=seed) if shortcut else NO_SHORTCUT.with_(seed=seed)
    a = partition(g, CYCLES, PATHS, params)
    b = partition(g.swapped(), PATHS, CYCLES, params)
    assert a.size_multiset() == b.size_multiset()
    for x, y in zip(a.pieces, b.pieces):
        if x.n > 1:
            assert x.color.other is y.color and x.family == y.family


def test_bipartite_all_blue_k20():
    g = ColoredCompleteGraph.monochromatic(20, BLUE)
    cert = partition_bipartite(g, PATHS)
    assert len(cert.pieces) <= 3
    assert verify_certificate(g, PATHS, PATHS, cert).ok


def test_bipartite_single_vertex():
    cert = partition_bipartite(ColoredCompleteGraph.monochromatic(1, RED), PATHS)
    assert len(cert.pieces) == 1


@pytest.mark.parametrize("shortcut", [20000, 0])
def test_bipartite_n120(shortcut):
    g = random_coloring(120, 0.5, 0)
    cert = partition_bipartite(g, PATHS, PipelineParams(shortcut_nodes=shortcut))
    assert verify_certificate(g, PATHS, PATHS, cert).ok
    assert all(p.family == "paths" for p in cert.pieces)


def test_bipartite_needs_bipartite_family():
    with pytest.raises(PreconditionError):
        partition_bipartite(ColoredCompleteGraph.monochromatic(4, RED), CYCLES)
