import random
import sys

import pytest
from hypothesis import strategies as st

from monopart.graph import ColoredCompleteGraph, Graph


def random_graph(n, p, rng):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def random_bounded(n, max_degree, rng, tries=None):
    """Random graph with maximum degree at most ``max_degree`` (edges added while allowed)."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rng.shuffle(pairs)
    deg = [0] * n
    edges = []
    for i, j in pairs[: tries or len(pairs)]:
        if deg[i] < max_degree and deg[j] < max_degree and rng.random() < 0.5:
            edges.append((i, j))
            deg[i] += 1
            deg[j] += 1
    return Graph(n, edges)


def random_colored(n, p, rng):
    return ColoredCompleteGraph.from_red_edges(
        n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    )


@st.composite
def colorings(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    bits = draw(st.lists(st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return ColoredCompleteGraph.from_red_edges(n, [e for e, b in zip(pairs, bits) if b])


@st.composite
def graphs(draw, min_n=0, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, b in zip(pairs, bits) if b])


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in acceptance.summary_lines():
        terminalreporter.write_line(line)
