"""Embedding engines.

``greedy_bipartite_extend`` places the second side of a bipartite pattern one
vertex at a time into a host side where every fixed image has almost full
degree. ``cylinder_embed`` is a budgeted backtracking search that places a
pattern into the parts of a cylinder according to a proper colouring, and
``cover_cylinder`` uses it to split a nearly balanced cylinder into a few
copies of family members.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from monopart import kernels
from monopart.equitable import color_with_sizes
from monopart.errors import CoverFailure, MonopartError, PreconditionError, StuckError
from monopart.graph import Color, ColoredCompleteGraph, Cylinder, Graph, iter_bits, mask_of


@dataclass(frozen=True)
class Embedding:
    """``mapping[u]`` is the host vertex of pattern vertex ``u``."""

    source: Graph
    mapping: tuple[int, ...]
    color: Color | None = None

    def __post_init__(self):
        object.__setattr__(self, "mapping", tuple(self.mapping))

    @property
    def target_vertices(self) -> frozenset[int]:
        return frozenset(self.mapping)

    @property
    def size(self) -> int:
        return len(self.mapping)


def embedding_problems(emb: Embedding, host: Graph | ColoredCompleteGraph) -> list[str]:
    """Violations of injectivity or of edge preservation (in ``emb.color`` for coloured hosts)."""
    out = []
    if len(emb.mapping) != emb.source.n:
        out.append(f"mapping has {len(emb.mapping)} entries for {emb.source.n} vertices")
        return out
    n = host.n
    if any(not 0 <= h < n for h in emb.mapping):
        out.append("mapping leaves the host vertex range")
        return out
    if len(set(emb.mapping)) != len(emb.mapping):
        out.append("mapping is not injective")
    if isinstance(host, ColoredCompleteGraph):
        if emb.source.edge_count and emb.color is None:
            out.append("coloured host but no colour given")
            return out
        adj = host.adj(emb.color) if emb.color is not None else None
    else:
        adj = host.adj
    for u, v in sorted(emb.source.edges):
        a, b = emb.mapping[u], emb.mapping[v]
        if not adj[a] >> b & 1:
            where = f" in colour {emb.color}" if emb.color is not None else ""
            out.append(f"edge ({u}, {v}) maps to non-edge ({a}, {b}){where}")
    return out


def check_embedding(emb: Embedding, host) -> bool:
    return not embedding_problems(emb, host)


def _host_adj(host, color):
    if isinstance(host, ColoredCompleteGraph):
        if color is None:
            raise PreconditionError("a coloured host needs a colour")
        return host.adj(color)
    return host.adj


def greedy_bipartite_extend(
    H: Graph,
    phi: dict,
    host,
    a_prime,
    b_prime,
    max_degree: int | None = None,
    color: Color | None = None,
    checked: bool = True,
) -> dict:
    """Extend ``phi`` (defined on side A of ``H``) to all of ``H``.

    The vertices of H outside ``phi`` form side B; each is placed, in
    increasing label order, on the first unused vertex of ``b_prime`` (in the
    given order) adjacent in the host to the images of all its H-neighbours.
    Preconditions, enforced when ``checked``: no edges inside B, every B
    vertex has at most ``max_degree`` neighbours, ``|b_prime| >= 2|B|``, and
    every vertex of ``a_prime`` has at least ``(1 - 1/(2*max_degree))|b_prime|``
    host neighbours in ``b_prime``. Under them the placement cannot get stuck.

    Returns the extended map; raises :class:`StuckError` if some B vertex has
    no admissible image (possible only when unchecked).
    """
    adj = _host_adj(host, color)
    b_side = [v for v in range(H.n) if v not in phi]
    b_mask = mask_of(b_side)
    b_prime = list(b_prime)
    a_prime = list(a_prime)
    if max_degree is None:
        max_degree = max([H.degree(b) for b in b_side] + [1])
    if checked:
        if len(set(phi.values())) != len(phi):
            raise PreconditionError("phi is not injective")
        if not set(phi.values()) <= set(a_prime):
            raise PreconditionError("phi maps outside a_prime")
        if set(a_prime) & set(b_prime):
            raise PreconditionError("a_prime and b_prime overlap")
        for b in b_side:
            if H.adj[b] & b_mask:
                raise PreconditionError(f"pattern has an edge inside side B at vertex {b}")
            if H.degree(b) > max_degree:
                raise PreconditionError(f"vertex {b} of side B has degree {H.degree(b)} > {max_degree}")
        if len(b_prime) < 2 * len(b_side):
            raise PreconditionError(
                f"|B'| = {len(b_prime)} is below 2|B| = {2 * len(b_side)}"
            )
        bp_mask = mask_of(b_prime)
        need = (1 - Fraction(1, 2 * max_degree)) * len(b_prime)
        for a in a_prime:
            deg = (adj[a] & bp_mask).bit_count()
            if deg < need:
                raise PreconditionError(
                    f"host vertex {a} has {deg} neighbours in B', below (1 - 1/(2*{max_degree}))|B'| = {need}"
                )
    out = dict(phi)
    used = set()
    for b in b_side:
        images = [out[a] for a in H.neighbors(b)]
        for h in b_prime:
            if h in used:
                continue
            if all(adj[h] >> x & 1 for x in images):
                out[b] = h
                used.add(h)
                break
        else:
            raise StuckError(b)
    return out


def embed_pattern(F: Graph, domains, adj, rank, node_budget: int, backend=None):
    """Embed ``F`` with ``domains[u]`` (bitmasks) into ``adj``; returns images or None."""
    if any(d == 0 for d in domains):
        return None, 0, False
    order = list(F.search_order())
    nbrs = [F.neighbors(u) for u in range(F.n)]
    return kernels.embed_search(order, nbrs, list(domains), adj, rank, node_budget, backend)


def cylinder_embed(
    F: Graph,
    cyl: Cylinder,
    quota,
    host: ColoredCompleteGraph,
    seed: int = 0,
    node_budget: int = 6000,
    restarts: int = 4,
    available=None,
    classes=None,
) -> Embedding | None:
    """Embed ``F`` in ``cyl.color`` with exactly ``quota[i]`` vertices in part ``i``.

    ``F`` is split by a proper colouring with class sizes ``quota`` (class
    ``i`` goes to part ``i``). Restarts reshuffle the host tie-break ranks and
    the colouring. ``available`` optionally restricts usable host vertices.
    Returns None when every attempt runs out of budget; that is not a proof
    that no embedding exists.
    """
    k = cyl.k
    quota = list(quota)
    if len(quota) != k:
        raise PreconditionError(f"quota has {len(quota)} entries for {k} parts")
    if sum(quota) != F.n:
        raise PreconditionError(f"quota sums to {sum(quota)}, pattern has {F.n} vertices")
    allowed = None if available is None else mask_of(available)
    parts = []
    for i, part in enumerate(cyl.parts):
        m = mask_of(part)
        if allowed is not None:
            m &= allowed
        if quota[i] < 0 or quota[i] > m.bit_count():
            raise PreconditionError(f"quota {quota[i]} does not fit part {i} with {m.bit_count()} free vertices")
        parts.append(m)
    adj = host.adj(cyl.color)
    if F.edge_count == 0:
        # no edges to respect: take the lowest-index free vertices of each part
        mapping = [0] * F.n
        u = 0
        for i, m in enumerate(parts):
            for h in itertools.islice(iter_bits(m), quota[i]):
                mapping[u] = h
                u += 1
        return Embedding(F, mapping, cyl.color)
    rng = random.Random(seed)
    n = host.n
    for attempt in range(restarts):
        cls = classes if classes is not None and attempt == 0 else color_with_sizes(F, quota, seed=attempt)
        if cls is None:
            return None
        domains = [0] * F.n
        for i, c in enumerate(cls):
            for u in c:
                domains[u] = parts[i]
        if attempt == 0:
            rank = list(range(n))
        else:
            rank = list(range(n))
            rng.shuffle(rank)
        images, _, _ = embed_pattern(F, domains, adj, rank, node_budget)
        if images is not None:
            emb = Embedding(F, images, cyl.color)
            problems = embedding_problems(emb, host)
            if problems:
                raise AssertionError(problems[0])
            return emb
    return None


def balance_weights(sizes) -> list[tuple[tuple[int, ...], int]]:
    """Correction weights for a cylinder with part sizes ``sizes``.

    For every ``(k-1)``-subset ``S`` of part indices, in lexicographic order,
    ``w_S = v - v_i`` where ``i`` is the index missing from ``S`` and ``v`` the
    largest part size. Taking ``w_S`` vertices from each part of every ``S``
    leaves the same number ``v - sum(w_S)`` in every part.
    """
    sizes = list(sizes)
    k = len(sizes)
    if k < 2:
        raise PreconditionError("need at least two parts")
    v = max(sizes)
    out = []
    for S in itertools.combinations(range(k), k - 1):
        missing = next(i for i in range(k) if i not in S)
        out.append((S, v - sizes[missing]))
    return out


def residues(sizes) -> list[int]:
    """What stays in each part after the corrections: ``v_i - sum of w_S over S containing i``."""
    weights = balance_weights(sizes)
    return [s - sum(w for S, w in weights if i in S) for i, s in enumerate(sizes)]


def cover_cylinder(
    cyl: Cylinder,
    fam,
    host: ColoredCompleteGraph,
    seed: int = 0,
    node_budget: int = 6000,
    restarts: int = 4,
) -> list[Embedding]:
    """Cover every vertex of ``cyl`` with at most ``k + 1`` copies of family members.

    Correction copies (one per subset ``S`` with ``w_S > 0``, in lexicographic
    order) take ``w_S`` vertices from each part in ``S``, first trying the
    lowest-index free vertices and then any free vertices; a final copy
    spans the now equal remainders. Raises :class:`CoverFailure` carrying
    the pieces embedded so far when a copy cannot be found.
    """
    k = cyl.k
    if fam.max_degree > k - 2 and fam.chi > k - 1:
        raise PreconditionError(
            f"family degree {fam.max_degree} needs k >= {fam.max_degree + 2} parts (or chi <= k - 1)"
        )
    sizes = list(cyl.sizes)
    if not any(sizes):
        return []
    weights = balance_weights(sizes)
    rest = max(sizes) - sum(w for _, w in weights)
    if rest < 0:
        raise PreconditionError(f"part sizes {sizes} are too unbalanced for a correction cover")
    free = set(cyl.vertices)
    pieces: list[Embedding] = []

    def place(quota, label):
        size = sum(quota)
        try:
            F = fam.member(size)
        except MonopartError as exc:
            raise CoverFailure(f"{label}: {exc}", pieces) from None
        cls = color_with_sizes(F, quota, seed=seed)
        if cls is None:
            raise CoverFailure(f"{label}: no proper colouring of member({size}) with sizes {quota}", pieces)
        attempts = []
        lowest = []
        for i, part in enumerate(cyl.parts):
            lowest.extend(sorted(v for v in part if v in free)[: quota[i]])
        attempts.append(lowest)
        attempts.append(sorted(free))
        for avail in attempts:
            emb = cylinder_embed(F, cyl, quota, host, seed=seed, node_budget=node_budget,
                                 restarts=restarts, available=avail, classes=cls)
            if emb is not None:
                pieces.append(emb)
                free.difference_update(emb.mapping)
                return
        raise CoverFailure(f"{label}: embedding search ran out of budget", pieces)

    for S, w in weights:
        if w == 0:
            continue
        place([w if i in S else 0 for i in range(k)], f"correction copy for parts {S}")
    if rest > 0:
        place([rest] * k, "final copy")
    if free:
        raise AssertionError("cylinder cover left vertices uncovered")
    return pieces
