"""Exact minimum monochromatic partitions of small coloured complete graphs.

Every vertex subset is tested for a spanning copy of the family member of its
size in each colour; a branch and bound then picks the fewest disjoint copies
covering all vertices, always branching on the lowest uncovered vertex.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from monopart.certificate import CertPiece, PartitionCertificate
from monopart.embedding import embed_pattern
from monopart.errors import PreconditionError, SizeError
from monopart.graph import BLUE, RED, Color, ColoredCompleteGraph, mask_of

ORACLE_CAP = 12


@dataclass(frozen=True)
class MonoCopy:
    color: Color
    vertices: tuple[int, ...]
    mapping: tuple[int, ...]

    @property
    def mask(self) -> int:
        return mask_of(self.vertices)


def _degree_profile_fits(member, adj, subset, mask):
    """Necessary condition: sorted member degrees are dominated by sorted host degrees."""
    need = sorted((a.bit_count() for a in member.adj), reverse=True)
    have = sorted(((adj[v] & mask).bit_count() for v in subset), reverse=True)
    return all(x <= y for x, y in zip(need, have))


def spanning_copy(g: ColoredCompleteGraph, color: Color, member, subset):
    """A bijection from ``member`` onto ``subset`` along ``color`` edges, or None (exhaustive)."""
    subset = tuple(subset)
    if member.n != len(subset):
        return None
    if member.edge_count == 0:
        return subset
    mask = mask_of(subset)
    adj = g.adj(color)
    if sum((adj[v] & mask).bit_count() for v in subset) // 2 < member.edge_count:
        return None
    if not _degree_profile_fits(member, adj, subset, mask):
        return None
    images, _, _ = embed_pattern(member, [mask] * member.n, adj, range(g.n), -1)
    return None if images is None else tuple(images)


def enumerate_mono_copies(g: ColoredCompleteGraph, fam, max_n: int | None = None,
                          colors=(RED, BLUE), cap: int = ORACLE_CAP) -> list[MonoCopy]:
    """Every ``(colour, vertex set)`` that spans a copy of the member of its size.

    One witness mapping per entry. Single vertices count in both colours.
    """
    if g.n > cap:
        raise SizeError(f"n={g.n} exceeds the oracle cap {cap}")
    max_n = g.n if max_n is None else min(max_n, g.n)
    out = []
    for m in range(1, max_n + 1):
        try:
            member = fam.member(m)
        except PreconditionError:
            continue
        for subset in itertools.combinations(range(g.n), m):
            for color in colors:
                mapping = spanning_copy(g, color, member, subset)
                if mapping is not None:
                    out.append(MonoCopy(color, subset, mapping))
    return out


def min_partition_exact(g: ColoredCompleteGraph, fam1, fam2, cap: int = ORACLE_CAP):
    """Minimum number of disjoint red ``fam1`` / blue ``fam2`` copies covering all vertices.

    Returns ``(count, certificate)``.
    """
    if g.n > cap:
        raise SizeError(f"n={g.n} exceeds the oracle cap {cap}")
    n = g.n
    copies = enumerate_mono_copies(g, fam1, colors=(RED,), cap=cap) + \
        enumerate_mono_copies(g, fam2, colors=(BLUE,), cap=cap)
    # one copy per vertex set is enough for the cover; red is kept when both exist
    by_set: dict[int, MonoCopy] = {}
    for c in copies:
        by_set.setdefault(c.mask, c)
    by_low: list[list[tuple[int, MonoCopy]]] = [[] for _ in range(n)]
    for mask, c in by_set.items():
        by_low[c.vertices[0]].append((mask, c))
    for lst in by_low:
        lst.sort(key=lambda mc: (-len(mc[1].vertices), mc[1].color is not RED, mc[1].vertices))
    biggest = max((len(c.vertices) for c in by_set.values()), default=1)
    full = (1 << n) - 1
    best: list = [n + 1, None]
    chosen: list[MonoCopy] = []

    def search(covered):
        if covered == full:
            if len(chosen) < best[0]:
                best[0] = len(chosen)
                best[1] = list(chosen)
            return
        left = n - covered.bit_count()
        if len(chosen) + math.ceil(left / biggest) >= best[0]:
            return
        u = (~covered & full & -(~covered & full)).bit_length() - 1
        for mask, c in by_low[u]:
            if mask & covered:
                continue
            chosen.append(c)
            search(covered | mask)
            chosen.pop()

    search(0)
    count, pick = best
    pieces = []
    for c in pick:
        fam = fam1 if c.color is RED else fam2
        pieces.append(CertPiece(c.color, fam.name, c.mapping))
    return count, PartitionCertificate(n, pieces)


def min_partition_naive(g: ColoredCompleteGraph, fam1, fam2) -> int:
    """Reference minimum by enumerating every set partition (use for n <= 7)."""
    n = g.n
    member_cache = {}

    def is_copy(block):
        key = tuple(block)
        if key not in member_cache:
            m = len(block)
            ok = False
            for color, fam in ((RED, fam1), (BLUE, fam2)):
                try:
                    member = fam.member(m)
                except PreconditionError:
                    continue
                if spanning_copy(g, color, member, block) is not None:
                    ok = True
                    break
            member_cache[key] = ok
        return member_cache[key]

    best = n

    def partitions(i, blocks):
        nonlocal best
        if len(blocks) >= best:
            return
        if i == n:
            if all(is_copy(b) for b in blocks):
                best = len(blocks)
            return
        for b in blocks:
            b.append(i)
            partitions(i + 1, blocks)
            b.pop()
        blocks.append([i])
        partitions(i + 1, blocks)
        blocks.pop()

    partitions(0, [])
    return best
