"""Graphs and 2-edge-coloured complete graphs stored as integer bitsets.

Vertex ``v`` of a graph on ``n`` vertices owns bit ``v`` of every adjacency
mask, so neighbourhood intersections and degree counts into a vertex set are
a single ``&`` followed by ``int.bit_count``.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from fractions import Fraction


class Color(str, enum.Enum):
    RED = "R"
    BLUE = "B"

    @property
    def other(self) -> "Color":
        return Color.BLUE if self is Color.RED else Color.RED

    def __str__(self) -> str:
        return self.value


RED = Color.RED
BLUE = Color.BLUE


def as_fraction(x) -> Fraction:
    """Exact rational from an int, Fraction, decimal string or float (via its repr)."""
    if isinstance(x, float):
        return Fraction(repr(x))
    return Fraction(x)


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Instances are immutable; ``adj[v]`` is the neighbourhood bitset of ``v``.
    """

    __slots__ = ("n", "adj", "_edges", "_cache")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if adj[u] >> v & 1:
                raise ValueError(f"duplicate edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        self._edges = None
        self._cache = {}

    @classmethod
    def from_adjacency(cls, adj: Iterable[int]) -> "Graph":
        adj = tuple(adj)
        n = len(adj)
        full = (1 << n) - 1
        for v, a in enumerate(adj):
            if a & ~full or a >> v & 1:
                raise ValueError(f"bad adjacency mask for vertex {v}")
        for v, a in enumerate(adj):
            for u in iter_bits(a):
                if not adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")
        g = cls.__new__(cls)
        g.n = n
        g.adj = adj
        g._edges = None
        g._cache = {}
        return g

    @property
    def vertex_count(self) -> int:
        return self.n

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        if self._edges is None:
            self._edges = frozenset(
                (u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))
            )
        return self._edges

    @property
    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degree_into(self, v: int, mask: int) -> int:
        return (self.adj[v] & mask).bit_count()

    @property
    def max_degree(self) -> int:
        return max((a.bit_count() for a in self.adj), default=0)

    @property
    def min_degree(self) -> int:
        return min((a.bit_count() for a in self.adj), default=0)

    def two_coloring(self) -> list[int] | None:
        """A proper 2-colouring as a list of 0/1 labels, or None if not bipartite."""
        side = [-1] * self.n
        for s in range(self.n):
            if side[s] >= 0:
                continue
            side[s] = 0
            stack = [s]
            while stack:
                u = stack.pop()
                for w in iter_bits(self.adj[u]):
                    if side[w] < 0:
                        side[w] = 1 - side[u]
                        stack.append(w)
                    elif side[w] == side[u]:
                        return None
        return side

    @property
    def is_bipartite(self) -> bool:
        return self.two_coloring() is not None

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for u in iter_bits(frontier):
                    nxt |= self.adj[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(list(iter_bits(comp)))
        return comps

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph induced on ``vertices``, relabelled to ``0..len-1`` in the given order."""
        vertices = list(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            a = 0
            for u in iter_bits(self.adj[v]):
                i = index.get(u)
                if i is not None:
                    a |= 1 << i
            adj.append(a)
        return Graph.from_adjacency(adj)

    def disjoint_union(self, other: "Graph") -> "Graph":
        """``self`` on labels ``0..n-1`` followed by ``other`` shifted by ``n``."""
        shift = self.n
        return Graph.from_adjacency(self.adj + tuple(a << shift for a in other.adj))

    def add_isolated(self, count: int) -> "Graph":
        return Graph.from_adjacency(self.adj + (0,) * count)

    def is_subgraph_of(self, other: "Graph") -> bool:
        """Labelled containment: same labels, every edge of self is an edge of other."""
        if self.n > other.n:
            return False
        return all(a & ~other.adj[v] == 0 for v, a in enumerate(self.adj))

    def search_order(self) -> tuple[int, ...]:
        """Vertex order for backtracking embedders.

        Each next vertex maximises the number of already ordered neighbours,
        then degree, then prefers the lowest label. A new component starts at
        its highest-degree vertex.
        """
        order = self._cache.get("order")
        if order is not None:
            return order
        n = self.n
        deg = [a.bit_count() for a in self.adj]
        placed = 0
        links = [0] * n
        out = []
        for _ in range(n):
            best = -1
            best_key = None
            for v in range(n):
                if placed >> v & 1:
                    continue
                key = (links[v], deg[v], -v)
                if best_key is None or key > best_key:
                    best, best_key = v, key
            out.append(best)
            placed |= 1 << best
            for w in iter_bits(self.adj[best]):
                links[w] += 1
        order = tuple(out)
        self._cache["order"] = order
        return order

    def __eq__(self, other):
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self):
        return hash(self.adj)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n <= 2:
        return path_graph(n)
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


class ColoredCompleteGraph:
    """A red/blue colouring of every pair of ``K_n``.

    Only the red adjacency is supplied; blue is its complement. Both colour
    classes are exposed as bitset adjacency tuples so every kernel serves
    either colour.
    """

    __slots__ = ("n", "red", "blue", "_graphs")

    def __init__(self, n: int, red_adj: Iterable[int]):
        if n < 1:
            raise ValueError("a coloured complete graph needs at least one vertex")
        red = tuple(red_adj)
        if len(red) != n:
            raise ValueError("red adjacency length differs from n")
        full = (1 << n) - 1
        for v, a in enumerate(red):
            if a & ~full or a >> v & 1:
                raise ValueError(f"bad red mask for vertex {v}")
            for u in iter_bits(a):
                if not red[u] >> v & 1:
                    raise ValueError(f"red adjacency not symmetric at ({v}, {u})")
        self.n = n
        self.red = red
        self.blue = tuple(full & ~a & ~(1 << v) for v, a in enumerate(red))
        self._graphs = {}

    @classmethod
    def from_red_edges(cls, n: int, red_edges: Iterable[tuple[int, int]]) -> "ColoredCompleteGraph":
        return cls(n, Graph(n, red_edges).adj)

    @classmethod
    def monochromatic(cls, n: int, color: Color) -> "ColoredCompleteGraph":
        full = (1 << n) - 1
        if color is RED:
            return cls(n, [full & ~(1 << v) for v in range(n)])
        return cls(n, [0] * n)

    def color(self, u: int, v: int) -> Color:
        if u == v:
            raise ValueError("a vertex pair needs two distinct vertices")
        return RED if self.red[u] >> v & 1 else BLUE

    def adj(self, color: Color) -> tuple[int, ...]:
        return self.red if color is RED else self.blue

    def color_graph(self, color: Color) -> Graph:
        g = self._graphs.get(color)
        if g is None:
            g = Graph.from_adjacency(self.adj(color))
            self._graphs[color] = g
        return g

    def edge_count(self, color: Color, vertices: Iterable[int] | None = None) -> int:
        adj = self.adj(color)
        if vertices is None:
            return sum(a.bit_count() for a in adj) // 2
        vertices = list(vertices)
        m = mask_of(vertices)
        return sum((adj[v] & m).bit_count() for v in vertices) // 2

    def swapped(self) -> "ColoredCompleteGraph":
        return ColoredCompleteGraph(self.n, self.blue)

    def induced(self, vertices: Iterable[int]) -> "ColoredCompleteGraph":
        return ColoredCompleteGraph.from_graph(Graph.from_adjacency(self.red).induced(vertices))

    @classmethod
    def from_graph(cls, red_graph: Graph) -> "ColoredCompleteGraph":
        return cls(red_graph.n, red_graph.adj)

    def __eq__(self, other):
        return isinstance(other, ColoredCompleteGraph) and self.red == other.red

    def __hash__(self):
        return hash(self.red)

    def __repr__(self):
        return f"ColoredCompleteGraph(n={self.n}, red={self.edge_count(RED)}, blue={self.edge_count(BLUE)})"


@dataclass(frozen=True)
class Cylinder:
    """Ordered disjoint vertex sets of a coloured complete graph plus parameters.

    ``parts[i]`` is a sorted tuple of host vertices. ``eps``, ``d`` and
    ``delta`` are the regularity, density and minimum-degree parameters the
    cylinder is claimed (not certified) to satisfy in ``color``.
    """

    parts: tuple[tuple[int, ...], ...]
    color: Color
    eps: Fraction = Fraction(0)
    d: Fraction = Fraction(0)
    delta: Fraction = Fraction(0)

    def __post_init__(self):
        parts = tuple(tuple(sorted(p)) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if len(parts) < 2:
            raise ValueError("a cylinder has at least two parts")
        seen = set()
        for p in parts:
            if seen.intersection(p):
                raise ValueError("cylinder parts overlap")
            seen.update(p)

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.parts)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(v for p in self.parts for v in p))

    def is_balanced(self, alpha) -> bool:
        alpha = as_fraction(alpha)
        s = self.sizes
        return all(
            abs(s[i] - s[j]) <= alpha * min(s[i], s[j])
            for i in range(len(s))
            for j in range(i + 1, len(s))
        )
