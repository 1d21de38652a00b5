"""Extraction of monochromatic family copies.

``find_mono_copy`` looks for a red copy of one pattern, then a blue copy of
another, inside a vertex subset. ``cover_most`` repeatedly removes a copy of
a member sized as a fixed fraction of what is left, halving the fraction
whenever neither colour yields a copy, until few enough vertices remain.
"""

from __future__ import annotations

import math
import time

from monopart.embedding import Embedding, embed_pattern, embedding_problems
from monopart.errors import BudgetError, PreconditionError
from monopart.graph import BLUE, RED, Color, ColoredCompleteGraph, Graph, as_fraction, mask_of
from monopart.params import PipelineParams


def find_mono_copy(
    g: ColoredCompleteGraph,
    subset,
    F1: Graph,
    F2: Graph,
    node_budget: int = -1,
    backend=None,
) -> tuple[Color, Embedding] | None:
    """A red copy of ``F1`` or else a blue copy of ``F2`` inside ``subset``.

    Each colour gets its own search with ``node_budget`` nodes (negative
    means exhaustive). Returns None when neither search succeeds.
    """
    subset = sorted(subset)
    dom = mask_of(subset)
    for color, F in ((RED, F1), (BLUE, F2)):
        if F.n > len(subset) or F.n == 0:
            continue
        if F.edge_count == 0:
            emb = Embedding(F, subset[: F.n], color)
            return color, emb
        images, _, _ = embed_pattern(F, [dom] * F.n, g.adj(color), range(g.n), node_budget, backend)
        if images is not None:
            emb = Embedding(F, images, color)
            problems = embedding_problems(emb, g)
            if problems:
                raise AssertionError(problems[0])
            return color, emb
    return None


def cover_most(
    g: ColoredCompleteGraph,
    vertices,
    fam1,
    fam2,
    eps,
    params: PipelineParams | None = None,
    piece_budget: int | None = None,
    deadline: float | None = None,
) -> tuple[list[Embedding], list[int]]:
    """Cover all but at most ``eps * len(vertices)`` of ``vertices`` with disjoint copies.

    Each round targets ``ceil(ratio * remaining)`` vertices with a red
    ``fam1`` member or a blue ``fam2`` member; on failure the ratio is halved
    for this and every later round. A one-vertex member always embeds, so the
    loop ends. Returns the copies (each carrying its colour) and the sorted
    leftovers. Raises :class:`BudgetError` with ``partial=(pieces, leftovers)``
    once more than ``piece_budget`` copies would be needed. Past ``deadline``
    (a ``time.monotonic`` value) only single vertices are taken.
    """
    params = params or PipelineParams()
    eps = as_fraction(eps)
    if not 0 < eps <= 1:
        raise PreconditionError("eps must lie in (0, 1]")
    remaining = sorted(vertices)
    limit = eps * len(remaining)
    ratio = params.cover_ratio
    pieces: list[Embedding] = []
    budget = params.piece_budget if piece_budget is None else piece_budget
    while len(remaining) > limit:
        if len(pieces) >= budget:
            raise BudgetError(f"piece budget {budget} exhausted with {len(remaining)} vertices left",
                              partial=(pieces, remaining))
        late = deadline is not None and time.monotonic() > deadline
        target = 1 if late else max(1, math.ceil(ratio * len(remaining)))
        found = None
        while found is None:
            try:
                F1, F2 = fam1.member(target), fam2.member(target)
            except PreconditionError:
                F1 = F2 = None
            if F1 is not None:
                found = find_mono_copy(g, remaining, F1, F2, params.copy_nodes)
            if found is None:
                if target == 1:
                    raise PreconditionError("families have no usable one-vertex member")
                ratio /= 2
                target = max(1, math.ceil(ratio * len(remaining)))
        _, emb = found
        pieces.append(emb)
        taken = set(emb.mapping)
        remaining = [v for v in remaining if v not in taken]
    return pieces, remaining
