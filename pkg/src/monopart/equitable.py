"""Equitable proper colourings with at least ``max_degree + 1`` colours.

The search starts from a size-aware greedy colouring in smallest-last order
and then rebalances. A vertex can move from class X to class Y when it has no
neighbour in Y; chains of such moves ending in a smallest class shift one
vertex from a large class to a small one while keeping every class
independent. When no chain exists, two classes are rebalanced by flipping
components of the bipartite graph they induce. Seeded restarts and, for tiny
graphs, an exhaustive search back this up.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from monopart.errors import MonopartError, PreconditionError
from monopart.graph import Graph, iter_bits, mask_of


@dataclass(frozen=True)
class EquitableColoring:
    classes: tuple[tuple[int, ...], ...]
    host: Graph

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def color_of(self) -> list[int]:
        out = [-1] * self.host.n
        for i, cls in enumerate(self.classes):
            for v in cls:
                out[v] = i
        return out

    def problems(self) -> list[str]:
        return coloring_problems(self.host, self.classes)

    def is_valid(self) -> bool:
        return not self.problems()


def coloring_problems(g: Graph, classes) -> list[str]:
    """Reasons why ``classes`` is not an equitable proper colouring of ``g``."""
    out = []
    seen = 0
    for i, cls in enumerate(classes):
        m = mask_of(cls)
        if m.bit_count() != len(cls):
            out.append(f"class {i} repeats a vertex")
        if m & seen:
            out.append(f"class {i} overlaps an earlier class")
        seen |= m
        for v in cls:
            if g.adj[v] & m:
                out.append(f"class {i} contains an edge at vertex {v}")
                break
    if seen != (1 << g.n) - 1:
        out.append("classes do not cover every vertex")
    sizes = [len(c) for c in classes]
    if sizes and max(sizes) - min(sizes) > 1:
        out.append(f"class sizes {sizes} differ by more than one")
    return out


def smallest_last_order(g: Graph) -> list[int]:
    """Degeneracy order: repeatedly strip a minimum-degree vertex, then reverse."""
    remaining = (1 << g.n) - 1
    deg = [a.bit_count() for a in g.adj]
    stripped = []
    for _ in range(g.n):
        v = min(iter_bits(remaining), key=lambda u: (deg[u], u))
        stripped.append(v)
        remaining &= ~(1 << v)
        for w in iter_bits(g.adj[v] & remaining):
            deg[w] -= 1
    stripped.reverse()
    return stripped


class _State:
    """Class masks and sizes; ``targets`` switches from equitable to exact sizes."""

    def __init__(self, g: Graph, r: int, targets=None):
        self.g = g
        self.r = r
        self.targets = targets
        self.masks = [0] * r
        self.sizes = [0] * r
        self.color = [-1] * g.n

    def place(self, v, c):
        self.masks[c] |= 1 << v
        self.sizes[c] += 1
        self.color[v] = c

    def move(self, v, c):
        old = self.color[v]
        self.masks[old] &= ~(1 << v)
        self.sizes[old] -= 1
        self.place(v, c)

    def cost(self, sizes=None) -> int:
        sizes = self.sizes if sizes is None else sizes
        if self.targets is None:
            return sum(s * s for s in sizes)
        return sum(abs(s - t) for s, t in zip(sizes, self.targets))

    def done(self) -> bool:
        if self.targets is None:
            return max(self.sizes) - min(self.sizes) <= 1
        return self.sizes == list(self.targets)

    def sinks(self):
        if self.targets is None:
            low = min(self.sizes)
            return [c for c in range(self.r) if self.sizes[c] == low]
        return [c for c in range(self.r) if self.sizes[c] < self.targets[c]]

    def excess(self, c, sink_size):
        """How strongly class ``c`` should give a vertex (positive means it should)."""
        if self.targets is None:
            return self.sizes[c] - sink_size - 1
        return self.sizes[c] - self.targets[c]


def _greedy(g: Graph, r: int, order, targets=None) -> _State | None:
    st = _State(g, r, targets)
    for v in order:
        free = [c for c in range(r) if not g.adj[v] & st.masks[c]]
        if not free:
            return None
        if targets is None:
            st.place(v, min(free, key=lambda c: (st.sizes[c], c)))
        else:
            st.place(v, min(free, key=lambda c: (st.sizes[c] - targets[c], c)))
    return st


def _shift_chain(st: _State) -> bool:
    """Move one vertex from an overfull class to an underfull one along a chain.

    Classes that can pass a vertex toward an underfull class are found by a
    backward search; the most overfull such class gives up a vertex and each
    class on the chain passes one on.
    """
    g, r = st.g, st.r
    sinks = st.sinks()
    if not sinks:
        return False
    sink_size = min(st.sizes[c] for c in sinks)
    nxt = {c: None for c in sinks}
    frontier = list(nxt)
    while frontier:
        new = []
        for y in frontier:
            my = st.masks[y]
            for x in range(r):
                if x in nxt:
                    continue
                for v in iter_bits(st.masks[x]):
                    if not g.adj[v] & my:
                        nxt[x] = (y, v)
                        new.append(x)
                        break
        frontier = new
    sources = [c for c in nxt if nxt[c] is not None and st.excess(c, sink_size) > 0]
    if not sources:
        return False
    x = max(sources, key=lambda c: (st.excess(c, sink_size), -c))
    moves = []
    while nxt[x] is not None:
        y, v = nxt[x]
        moves.append((v, y))
        x = y
    # every vertex was chosen against the classes as they were before any move
    for v, y in moves:
        st.move(v, y)
    return True


def _kempe_transfer(st: _State) -> bool:
    """Improve a pair of classes by flipping components of their union."""
    g, r = st.g, st.r
    base = st.cost()
    pairs = sorted(
        ((x, y) for x in range(r) for y in range(r) if st.sizes[x] > st.sizes[y]),
        key=lambda p: (st.sizes[p[1]] - st.sizes[p[0]], p),
    )
    for x, y in pairs:
        union = st.masks[x] | st.masks[y]
        comps = []
        seen = 0
        for s in iter_bits(union):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                reach = 0
                for u in iter_bits(frontier):
                    reach |= g.adj[u]
                frontier = reach & union & ~comp
                comp |= frontier
            seen |= comp
            shift = (comp & st.masks[x]).bit_count() - (comp & st.masks[y]).bit_count()
            if shift:
                comps.append((shift, comp))
        span = st.sizes[x] + st.sizes[y]
        # subset sums of the shifts, remembering one realising subset
        reach = {0: ()}
        for i, (shift, _) in enumerate(comps):
            for total, used in list(reach.items()):
                t = total + shift
                if t not in reach and -span <= t <= span:
                    reach[t] = used + (i,)

        def pair_cost(t):
            sizes = list(st.sizes)
            sizes[x] -= t
            sizes[y] += t
            return st.cost(sizes)

        best = min(reach, key=lambda t: (pair_cost(t), abs(t), t))
        if pair_cost(best) >= base:
            continue
        for i in reach[best]:
            comp = comps[i][1]
            for v in iter_bits(comp):
                st.move(v, y if st.color[v] == x else x)
        return True
    return False


def _rebalance(st: _State, max_rounds: int) -> bool:
    for _ in range(max_rounds):
        if st.done():
            return True
        if not _shift_chain(st) and not _kempe_transfer(st):
            return False
    return st.done()


def _exhaustive(g: Graph, caps):
    n, r = g.n, len(caps)
    masks = [0] * r
    order = smallest_last_order(g)

    def go(i):
        if i == n:
            return True
        v = order[i]
        tried_empty = set()
        for c in range(r):
            if masks[c].bit_count() >= caps[c] or g.adj[v] & masks[c]:
                continue
            if masks[c] == 0:
                # empty classes of equal capacity are interchangeable
                if caps[c] in tried_empty:
                    continue
                tried_empty.add(caps[c])
            masks[c] |= 1 << v
            if go(i + 1):
                return True
            masks[c] &= ~(1 << v)
        return False

    return masks if go(0) else None


def _search(g: Graph, r: int, targets, seed: int, restarts: int):
    rng = random.Random(seed)
    order = smallest_last_order(g)
    rounds = 4 * g.n + 16
    for _ in range(restarts + 1):
        st = _greedy(g, r, order, targets)
        if st is not None and _rebalance(st, rounds):
            return st.masks
        order = list(range(g.n))
        rng.shuffle(order)
    if g.n <= 10:
        if targets is None:
            q, rem = divmod(g.n, r)
            return _exhaustive(g, [q + 1] * rem + [q] * (r - rem))
        return _exhaustive(g, list(targets))
    return None


def equitable_color(g: Graph, r: int, seed: int = 0, restarts: int = 200) -> EquitableColoring:
    """An equitable proper colouring of ``g`` with exactly ``r`` classes.

    Requires ``r > max_degree(g)``. Deterministic for a given ``seed``.
    """
    if r < 1:
        raise PreconditionError("need at least one colour")
    if r <= g.max_degree:
        raise PreconditionError(
            f"r={r} colours is at most the maximum degree {g.max_degree}; "
            "only r >= max_degree + 1 is supported"
        )
    masks = _search(g, r, None, seed, restarts)
    if masks is None:
        raise MonopartError(f"equitable colouring search failed on {g!r} with r={r}")
    return _finish(g, masks)


def color_with_sizes(g: Graph, sizes, seed: int = 0, restarts: int = 30):
    """Proper colouring whose class ``i`` has exactly ``sizes[i]`` vertices.

    Returns a list of vertex tuples aligned with ``sizes``, or None when the
    search fails (which is not a proof that no such colouring exists, except
    on graphs with at most 10 vertices where the search is exhaustive).
    """
    sizes = list(sizes)
    if sum(sizes) != g.n or any(s < 0 for s in sizes):
        raise PreconditionError(f"class sizes {sizes} do not add up to {g.n}")
    if not sizes:
        return [] if g.n == 0 else None
    masks = _search(g, len(sizes), sizes, seed, restarts)
    if masks is None:
        return None
    classes = [tuple(iter_bits(m)) for m in masks]
    assert [len(c) for c in classes] == sizes
    assert all(not g.adj[v] & m for m in masks for v in iter_bits(m))
    return classes


def _finish(g, masks) -> EquitableColoring:
    classes = tuple(tuple(iter_bits(m)) for m in masks)
    # order classes by size (largest first), then by smallest member
    classes = tuple(sorted(classes, key=lambda c: (-len(c), c[0] if c else g.n)))
    col = EquitableColoring(classes, g)
    problems = col.problems()
    if problems:
        raise AssertionError("; ".join(problems))
    return col


def equitable_two_coloring(g: Graph) -> EquitableColoring | None:
    """Equitable proper 2-colouring of a bipartite graph, or None if none exists.

    Each connected component can be placed with either side first; a subset
    DP over components picks orientations whose side totals differ by at most
    one.
    """
    side = g.two_coloring()
    if side is None:
        return None
    comps = g.components()
    diffs = []
    for comp in comps:
        zeros = sum(1 for v in comp if side[v] == 0)
        diffs.append(zeros - (len(comp) - zeros))
    # reach[t] = flip choices achieving imbalance t (first class minus second)
    reach = {0: ()}
    for d in diffs:
        nxt = {}
        for t, choice in reach.items():
            for flip, s in ((False, d), (True, -d)):
                if t + s not in nxt:
                    nxt[t + s] = choice + (flip,)
        reach = nxt
    best = min(reach, key=lambda t: (abs(t), -t))
    if abs(best) > 1:
        return None
    first, second = [], []
    for comp, flip in zip(comps, reach[best]):
        for v in comp:
            (first if (side[v] == 0) != flip else second).append(v)
    return _finish(g, [mask_of(first), mask_of(second)])
