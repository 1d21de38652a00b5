"""Seeded instance generators and monochromatic copy counting."""

from __future__ import annotations

import random
from fractions import Fraction

from monopart.errors import PreconditionError
from monopart.graph import BLUE, RED, Color, ColoredCompleteGraph, Graph
from monopart.params import derive_seed

MODES = ("random", "bipartite_split", "adversarial")


def random_coloring(n: int, p, seed: int = 0) -> ColoredCompleteGraph:
    """Each pair red independently with probability ``p``."""
    if n < 1:
        raise PreconditionError("n must be at least 1")
    p = float(p)
    if not 0 <= p <= 1:
        raise PreconditionError(f"p must lie in [0, 1], got {p}")
    rng = random.Random(derive_seed(seed, "random", n, repr(p)))
    red = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                red[i] |= 1 << j
                red[j] |= 1 << i
    return ColoredCompleteGraph(n, red)


def bipartite_split(n: int, s: int) -> ColoredCompleteGraph:
    """Red between ``{0..s-1}`` and the rest, blue inside both classes."""
    if n < 1 or not 0 <= s <= n:
        raise PreconditionError(f"need n >= 1 and 0 <= s <= n, got n={n}, s={s}")
    left = (1 << s) - 1
    right = ((1 << n) - 1) ^ left
    return ColoredCompleteGraph(n, [right if v < s else left for v in range(n)])


def _extensions(F: Graph, adj, fixed: dict) -> int:
    """Injective homomorphisms of ``F`` into ``adj`` extending ``fixed``."""
    order = [v for v in F.search_order() if v not in fixed]
    n_host = len(adj)
    full = (1 << n_host) - 1
    phi = dict(fixed)
    used = 0
    for h in phi.values():
        used |= 1 << h
    for a in phi:
        for b in F.neighbors(a):
            if b in phi and not adj[phi[a]] >> phi[b] & 1:
                return 0

    def rec(i, used):
        if i == len(order):
            return 1
        v = order[i]
        cand = full & ~used
        for u in F.neighbors(v):
            if u in phi:
                cand &= adj[phi[u]]
        total = 0
        while cand:
            low = cand & -cand
            phi[v] = low.bit_length() - 1
            total += rec(i + 1, used | low)
            cand ^= low
        phi.pop(v, None)
        return total

    return rec(0, used)


def automorphism_count(F: Graph) -> int:
    return _extensions(F, F.adj, {})


def count_mono_copies(g: ColoredCompleteGraph, F: Graph, color: Color | None = None) -> int:
    """Number of (unlabelled) copies of ``F`` in one colour, or in both when ``color`` is None."""
    colors = (RED, BLUE) if color is None else (color,)
    aut = automorphism_count(F)
    return sum(_extensions(F, g.adj(c), {}) for c in colors) // aut


def _through(F, adj, u, v, aut):
    """Copies of ``F`` in ``adj`` that use the host edge ``uv`` (assumed present)."""
    total = 0
    for a, b in F.edges:
        total += _extensions(F, adj, {a: u, b: v}) + _extensions(F, adj, {a: v, b: u})
    return total // aut


def adversarial_search(n: int, F: Graph, budget: int = 2000, seed: int = 0):
    """Local search for a colouring with few monochromatic copies of ``F``.

    Starts from a fair random colouring and flips single pairs whenever that
    does not increase the number of monochromatic copies. Returns
    ``(colouring, residual_count)``.
    """
    if F.edge_count == 0:
        raise PreconditionError("the pattern needs at least one edge")
    g = random_coloring(n, 0.5, derive_seed(seed, "adversarial-start"))
    red = list(g.red)
    rng = random.Random(derive_seed(seed, "adversarial", n))
    aut = automorphism_count(F)
    current = ColoredCompleteGraph(n, red)
    cost = count_mono_copies(current, F)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for _ in range(budget):
        if cost == 0 or not pairs:
            break
        u, v = rng.choice(pairs)
        was = current.color(u, v)
        before = _through(F, current.adj(was), u, v, aut)
        red[u] ^= 1 << v
        red[v] ^= 1 << u
        flipped = ColoredCompleteGraph(n, red)
        after = _through(F, flipped.adj(was.other), u, v, aut)
        if after <= before:
            current = flipped
            cost += after - before
        else:
            red[u] ^= 1 << v
            red[v] ^= 1 << u
    return current, cost


def gen_coloring(n: int, mode: str = "random", param=Fraction(1, 2), seed: int = 0):
    """Generate an instance. ``param`` is ``p`` for ``random``, ``s`` for
    ``bipartite_split`` and ``(F, budget)`` for ``adversarial`` (where the
    residual count is dropped; call :func:`adversarial_search` to keep it).
    """
    if mode == "random":
        return random_coloring(n, param, seed)
    if mode == "bipartite_split":
        return bipartite_split(n, int(param))
    if mode == "adversarial":
        try:
            F, budget = param
        except (TypeError, ValueError):
            raise PreconditionError("adversarial mode takes (pattern, budget)") from None
        return adversarial_search(n, F, budget, seed)[0]
    raise PreconditionError(f"unknown mode {mode!r}; choose from {', '.join(MODES)}")
