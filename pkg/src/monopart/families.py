"""Bounded-degree graph sequences ``F_1, F_2, ...``.

A :class:`GraphFamily` produces one labelled graph per size, memoised, and
carries the metadata the partition pipeline needs: the degree bound, whether
members are bipartite, and ``chi``, a number of colours in which every member
has an equitable proper colouring.
"""

from __future__ import annotations

import os
import random
import re
import threading
from dataclasses import dataclass
from typing import Callable

from monopart.equitable import coloring_problems, equitable_color, equitable_two_coloring
from monopart.errors import FormatError, MonopartError, PreconditionError
from monopart.graph import Graph, complete_graph, cycle_graph, path_graph
from monopart.params import derive_seed


class GraphFamily:
    """A sequence of graphs with ``member(n)`` on exactly ``n`` vertices.

    ``colorer(n, graph)`` may supply an equitable proper ``chi``-colouring
    directly; otherwise one is computed on demand. ``decompose`` and
    ``reconstruct`` are set by the derived families (see
    :func:`doubled_family` and :func:`family_minus_class`).
    """

    def __init__(
        self,
        name: str,
        max_degree: int,
        generator: Callable[[int], Graph],
        bipartite: bool = False,
        chi: int | None = None,
        colorer: Callable[[int, Graph], list] | None = None,
        provenance: str | None = None,
    ):
        if max_degree < 0:
            raise PreconditionError("max_degree must be nonnegative")
        self.name = name
        self.max_degree = max_degree
        self.bipartite = bipartite
        self.chi = chi if chi is not None else max_degree + 1
        self.provenance = provenance or name
        self._generator = generator
        self._colorer = colorer
        self._members: dict[int, Graph] = {}
        self._classes: dict[int, tuple] = {}
        self._lock = threading.Lock()
        self.decompose: Callable[[int], list[tuple[int, int]]] | None = None
        self.reconstruct: Callable[[int], "Reconstruction"] | None = None
        self.parent: GraphFamily | None = None

    def member(self, n: int) -> Graph:
        g = self._members.get(n)
        if g is not None:
            return g
        if n < 1:
            raise PreconditionError(f"family members exist for n >= 1, not n={n}")
        g = self._generator(n)
        self._validate(n, g)
        with self._lock:
            return self._members.setdefault(n, g)

    def _validate(self, n, g):
        if g.n != n:
            raise MonopartError(f"{self.name}: member({n}) has {g.n} vertices")
        if g.max_degree > self.max_degree:
            raise MonopartError(f"{self.name}: member({n}) has degree {g.max_degree} > {self.max_degree}")
        if self.bipartite and not g.is_bipartite:
            raise MonopartError(f"{self.name}: member({n}) is not bipartite")
        if self.chi == 1 and g.edge_count:
            raise MonopartError(f"{self.name}: chi=1 family with edges in member({n})")

    def equitable_classes(self, n: int) -> tuple[tuple[int, ...], ...]:
        """``chi`` classes of an equitable proper colouring of ``member(n)``, largest first."""
        cached = self._classes.get(n)
        if cached is not None:
            return cached
        g = self.member(n)
        if self._colorer is not None:
            classes = [tuple(sorted(c)) for c in self._colorer(n, g)]
            while len(classes) < self.chi:
                classes.append(())
            classes.sort(key=lambda c: (-len(c), c[0] if c else n))
        elif self.chi > g.max_degree:
            classes = equitable_color(g, self.chi).classes
        elif self.chi == 2:
            col = equitable_two_coloring(g)
            if col is None:
                raise MonopartError(f"{self.name}: member({n}) has no equitable 2-colouring")
            classes = col.classes
        else:
            raise MonopartError(f"{self.name}: no way to colour member({n}) with {self.chi} colours")
        classes = tuple(tuple(c) for c in classes)
        self._check_classes(n, g, classes)
        with self._lock:
            return self._classes.setdefault(n, classes)

    def _check_classes(self, n, g, classes):
        if len(classes) != self.chi:
            raise MonopartError(f"{self.name}: colouring of member({n}) has {len(classes)} classes")
        problems = coloring_problems(g, classes)
        if problems:
            raise MonopartError(f"{self.name}: bad colouring of member({n}): {problems[0]}")

    def __repr__(self):
        return f"GraphFamily({self.name!r}, max_degree={self.max_degree}, chi={self.chi})"


def _alternating(n, g):
    return [range(0, n, 2), range(1, n, 2)]


def _paths() -> GraphFamily:
    return GraphFamily("paths", 2, path_graph, bipartite=True, chi=2, colorer=_alternating, provenance="builtin:paths")


def _cycles() -> GraphFamily:
    return GraphFamily("cycles", 2, cycle_graph, chi=3, provenance="builtin:cycles")


def _matching(n: int) -> Graph:
    return Graph(n, ((2 * i, 2 * i + 1) for i in range(n // 2)))


def _matchings() -> GraphFamily:
    return GraphFamily("matchings", 1, _matching, bipartite=True, chi=2, colorer=_alternating, provenance="builtin:matchings")


def cycle_power_graph(n: int, k: int) -> Graph:
    """``k``-th power of the ``n``-cycle; ``K_n`` when ``n <= 2k + 1``."""
    if n <= 2 * k + 1:
        return complete_graph(n)
    return Graph(n, ((i, (i + j) % n) for i in range(n) for j in range(1, k + 1)))


def _cycle_power(k: int) -> GraphFamily:
    if k < 1:
        raise PreconditionError("cycle_power needs k >= 1")
    return GraphFamily(
        f"cycle_power({k})", 2 * k, lambda n: cycle_power_graph(n, k),
        chi=2 * k + 1, provenance=f"builtin:cycle_power({k})",
    )


def random_bounded_graph(n: int, max_degree: int, rng: random.Random) -> Graph:
    """Random graph with degrees capped at ``max_degree`` (random pair proposals)."""
    deg = [0] * n
    adj = [0] * n
    edges = []
    if n >= 2:
        for _ in range(n * max_degree * 2):
            u, v = rng.randrange(n), rng.randrange(n)
            if u == v or adj[u] >> v & 1 or deg[u] >= max_degree or deg[v] >= max_degree:
                continue
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            deg[u] += 1
            deg[v] += 1
            edges.append((u, v))
    return Graph(n, edges)


def _random_bounded(max_degree: int, seed: int) -> GraphFamily:
    if max_degree < 1:
        raise PreconditionError("random_bounded needs max_degree >= 1")
    name = f"random_bounded({max_degree},{seed})"
    return GraphFamily(
        name, max_degree,
        lambda n: random_bounded_graph(n, max_degree, random.Random(derive_seed(seed, "random_bounded", max_degree, n))),
        provenance=f"builtin:{name}",
    )


_BUILTIN_NAMES = ("paths", "cycles", "matchings", "cycle_power", "random_bounded")


def builtin(name: str, *param) -> GraphFamily:
    """Built-in families by name.

    ``paths``, ``cycles`` (``K_1`` and ``K_2`` count as cycles),
    ``matchings``, ``cycle_power`` with parameter ``k``, and
    ``random_bounded`` with parameters ``(max_degree, seed)``.
    """
    if name == "paths":
        return _paths()
    if name == "cycles":
        return _cycles()
    if name == "matchings":
        return _matchings()
    if name == "cycle_power":
        return _cycle_power(*param)
    if name == "random_bounded":
        return _random_bounded(*param)
    raise PreconditionError(f"unknown family {name!r}; known: {', '.join(_BUILTIN_NAMES)}")


def random_bipartite_base(n: int, max_degree: int, rng: random.Random) -> Graph:
    """Near-regular random bipartite graph on sides of sizes ``n//2`` and ``n - n//2``.

    Side ``L`` is ``0..n//2-1``. Each vertex gets ``max_degree`` stubs, stubs
    are paired at random, and repeated pairs are dropped; the best of a few
    pairings (most edges) is kept.
    """
    a = n // 2
    b = n - a
    if a == 0:
        return Graph(n)
    best = None
    for _ in range(8):
        left = [u for u in range(a) for _ in range(min(max_degree, b))]
        right = [a + v for v in range(b) for _ in range(min(max_degree, a))]
        rng.shuffle(left)
        rng.shuffle(right)
        edges = set()
        for u, v in zip(left, right):
            edges.add((u, v))
        if best is None or len(edges) > len(best):
            best = edges
        if len(best) == min(len(left), len(right)):
            break
    return Graph(n, sorted(best))


def lower_bound_family(max_degree: int, base_seed: int = 0) -> GraphFamily:
    """Nested family built from random bipartite base graphs ``G_n``.

    ``member(1) = G_1``; ``member(2^i)`` is ``member(2^(i-1))`` followed by
    ``G_(2^(i-1))``; other sizes pad the largest power of two below them with
    isolated vertices. Every member is a labelled subgraph of every larger one.
    """
    if max_degree < 1:
        raise PreconditionError("lower_bound_family needs max_degree >= 1")
    bases: dict[int, Graph] = {}

    def base(m):
        if m not in bases:
            bases[m] = random_bipartite_base(m, max_degree, random.Random(derive_seed(base_seed, "lower_bound", max_degree, m)))
        return bases[m]

    def power(i):
        g = base(1)
        for j in range(1, i + 1):
            g = g.disjoint_union(base(2 ** (j - 1)))
        return g

    def gen(n):
        i = n.bit_length() - 1
        return power(i).add_isolated(n - 2 ** i)

    def colorer(n, g):
        col = equitable_two_coloring(g)
        if col is None:
            raise MonopartError(f"lower-bound member({n}) has no equitable 2-colouring")
        return col.classes

    name = f"lower_bound({max_degree},{base_seed})"
    return GraphFamily(name, max_degree, gen, bipartite=True, chi=2, colorer=colorer, provenance=f"builtin:{name}")


@dataclass(frozen=True)
class Reconstruction:
    """How ``member(m)`` of a reduced family sits inside a source member.

    ``kept[i]`` is the source label of reduced vertex ``i``; ``removed`` is the
    deleted colour class (source labels).
    """

    source: Graph
    kept: tuple[int, ...]
    removed: tuple[int, ...]


def family_minus_class(fam: GraphFamily, chi: int | None = None) -> GraphFamily:
    """Members of ``fam`` with one equitable colour class deleted.

    ``member(m)`` comes from ``fam.member(ceil(chi*m/(chi-1)))``: the first
    class of size ``ceil(m/(chi-1))`` in an equitable ``chi``-colouring is
    removed and the rest relabelled in increasing order. The result has an
    equitable ``(chi-1)``-colouring.
    """
    chi = fam.chi if chi is None else chi
    if chi < 2:
        raise PreconditionError("removing a class needs chi >= 2 (a chi=1 family is already edgeless)")
    if chi != fam.chi:
        raise PreconditionError(f"family {fam.name} stores chi={fam.chi}, got chi={chi}")
    records: dict[int, Reconstruction] = {}

    def record(m):
        rec = records.get(m)
        if rec is None:
            big = -(-chi * m // (chi - 1))
            size = -(-m // (chi - 1))
            classes = fam.equitable_classes(big)
            drop = next(c for c in classes if len(c) == size)
            kept = tuple(v for v in range(big) if v not in set(drop))
            rec = records.setdefault(m, Reconstruction(fam.member(big), kept, drop))
        return rec

    def gen(m):
        rec = record(m)
        return rec.source.induced(rec.kept)

    def colorer(m, g):
        rec = record(m)
        index = {v: i for i, v in enumerate(rec.kept)}
        drop = set(rec.removed)
        src_classes = fam.equitable_classes(len(rec.source.adj))
        out = []
        skipped = False
        for c in src_classes:
            if not skipped and set(c) == drop:
                skipped = True
                continue
            out.append([index[v] for v in c])
        return out

    reduced = GraphFamily(
        f"{fam.name}-minus-class",
        fam.max_degree,
        gen,
        bipartite=fam.bipartite or chi - 1 <= 2,
        chi=chi - 1,
        colorer=colorer,
        provenance=f"minus-class({fam.provenance})",
    )
    reduced.reconstruct = record
    reduced.parent = fam
    return reduced


def doubled_family(fam: GraphFamily) -> GraphFamily:
    """Two copies of ``fam.member(n//2)``, plus ``fam.member(1)`` when ``n`` is odd.

    ``member(1)`` is a single vertex. Members have equitable proper
    2-colourings; ``decompose(n)`` lists the ``(offset, size)`` blocks, each a
    copy of ``fam.member(size)`` on consecutive labels.
    """
    if not fam.bipartite:
        raise PreconditionError(f"doubling needs a bipartite family, {fam.name} is not")

    def decompose(n):
        if n == 1:
            return [(0, 1)]
        h = n // 2
        blocks = [(0, h), (h, h)]
        if n % 2:
            blocks.append((2 * h, 1))
        return blocks

    def gen(n):
        g = None
        for _, size in decompose(n):
            part = fam.member(size)
            g = part if g is None else g.disjoint_union(part)
        return g

    def colorer(n, g):
        first, second = [], []
        for i, (off, size) in enumerate(decompose(n)):
            side = fam.member(size).two_coloring()
            for v in range(size):
                # the second copy uses the opposite orientation so sides balance
                target = first if (side[v] == 0) == (i % 2 == 0) else second
                target.append(off + v)
        if len(first) < len(second):
            first, second = second, first
        return [first, second]

    doubled = GraphFamily(
        f"doubled({fam.name})", fam.max_degree, gen, bipartite=True, chi=2,
        colorer=colorer, provenance=f"doubled({fam.provenance})",
    )
    doubled.decompose = decompose
    doubled.parent = fam
    return doubled


def edgeless_family(name: str = "independent") -> GraphFamily:
    return GraphFamily(name, 0, Graph, bipartite=True, chi=1, provenance=f"builtin:{name}")


_EDGES_FILE = re.compile(r"F(\d+)\.edges$")


def read_edges_file(path, expected_n=None) -> Graph:
    """Parse ``<n> <m>`` followed by ``m`` lines ``<u> <v>`` (1-indexed)."""
    with open(path) as fh:
        lines = [ln.strip() for ln in fh]
    while lines and not lines[-1]:
        lines.pop()
    if not lines:
        raise FormatError(f"{path}: empty file", 1)
    head = lines[0].split()
    if len(head) != 2 or not all(t.isdigit() for t in head):
        raise FormatError(f"{path}: expected '<n> <m>'", 1)
    n, m = int(head[0]), int(head[1])
    if expected_n is not None and n != expected_n:
        raise FormatError(f"{path}: header says n={n}, file name says {expected_n}", 1)
    if len(lines) - 1 != m:
        raise FormatError(f"{path}: header promises {m} edges, found {len(lines) - 1} lines", 1)
    edges = []
    for i, ln in enumerate(lines[1:], start=2):
        tok = ln.split()
        if len(tok) != 2 or not all(t.isdigit() for t in tok):
            raise FormatError(f"{path}: expected '<u> <v>'", i)
        u, v = int(tok[0]), int(tok[1])
        if not (1 <= u <= n and 1 <= v <= n):
            raise FormatError(f"{path}: vertex out of range 1..{n}", i)
        edges.append((u - 1, v - 1))
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise FormatError(f"{path}: {exc}") from None


def write_edges_file(path, g: Graph):
    with open(path, "w") as fh:
        fh.write(f"{g.n} {g.edge_count}\n")
        for u, v in sorted(g.edges):
            fh.write(f"{u + 1} {v + 1}\n")


def family_from_directory(path: str) -> GraphFamily:
    """Family read from ``F<n>.edges`` files; requesting a missing size is an error."""
    if not os.path.isdir(path):
        raise PreconditionError(f"{path} is not a directory")
    graphs = {}
    for entry in sorted(os.listdir(path)):
        m = _EDGES_FILE.fullmatch(entry)
        if m:
            n = int(m.group(1))
            graphs[n] = read_edges_file(os.path.join(path, entry), n)
    if not graphs:
        raise PreconditionError(f"{path} holds no F<n>.edges files")
    delta = max(g.max_degree for g in graphs.values())
    bip = all(g.is_bipartite for g in graphs.values())

    def gen(n):
        try:
            return graphs[n]
        except KeyError:
            raise PreconditionError(f"family directory {path} has no F{n}.edges") from None

    name = os.path.basename(os.path.normpath(path))
    return GraphFamily(name, delta, gen, bipartite=bip, chi=max(delta + 1, 1), provenance=f"dir:{path}")


_CALL = re.compile(r"(\w+)\(([^)]*)\)$")


def family_from_spec(spec: str) -> GraphFamily:
    """Family from a command-line style description.

    Accepts ``paths``, ``cycles``, ``matchings``, ``cycle_power(k)``,
    ``random_bounded(D,seed)``, ``lower_bound(D,seed)`` or a directory of
    ``F<n>.edges`` files.
    """
    spec = spec.strip()
    if spec in ("paths", "cycles", "matchings"):
        return builtin(spec)
    m = _CALL.fullmatch(spec.replace(" ", ""))
    if m:
        name = m.group(1)
        try:
            args = [int(t) for t in m.group(2).split(",") if t]
        except ValueError:
            raise PreconditionError(f"bad family parameters in {spec!r}") from None
        if name == "lower_bound":
            return lower_bound_family(*args)
        if name in ("cycle_power", "random_bounded"):
            return builtin(name, *args)
        raise PreconditionError(f"unknown family {name!r}")
    if os.path.isdir(spec):
        return family_from_directory(spec)
    raise PreconditionError(f"unknown family {spec!r}")


def largest_member_size(fam: GraphFamily, n: int) -> int:
    """Largest ``m <= n`` the family is defined at (directory families may have gaps)."""
    for m in range(n, 0, -1):
        try:
            fam.member(m)
            return m
        except PreconditionError:
            continue
    return 0


__all__ = [
    "GraphFamily", "Reconstruction", "builtin", "cycle_power_graph", "doubled_family",
    "edgeless_family", "family_from_directory", "family_from_spec", "family_minus_class",
    "lower_bound_family", "random_bipartite_base", "random_bounded_graph", "read_edges_file",
    "write_edges_file", "largest_member_size",
]
