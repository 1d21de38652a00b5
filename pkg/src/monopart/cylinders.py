"""Search for a monochromatic, dense, regular k-cylinder.

Random equal-size candidate parts are coloured by the majority colour of each
pair (red on ties), a monochromatic k-clique among them picks the parts, and
random swaps with outside vertices repair pairs that the regularity check
refutes.
"""

from __future__ import annotations

import random
from fractions import Fraction

from monopart.errors import PreconditionError
from monopart.graph import BLUE, RED, Color, ColoredCompleteGraph, Cylinder, as_fraction, mask_of
from monopart.params import PipelineParams, derive_seed
from monopart.regularity import VertexPair, check_regularity, density


def find_mono_clique(colors: ColoredCompleteGraph, k: int) -> tuple[Color, tuple[int, ...]] | None:
    """Lexicographically first monochromatic ``k``-clique, red before blue.

    Exact branch and bound over bitsets: a branch is cut when the chosen
    vertices plus the remaining candidates cannot reach ``k``.
    """
    if k < 1:
        raise PreconditionError("k must be positive")
    n = colors.n
    if k > n:
        return None
    for color in (RED, BLUE):
        adj = colors.adj(color)
        found = _clique(adj, (1 << n) - 1, k, ())
        if found is not None:
            return color, found
    return None


def _clique(adj, cand, k, chosen):
    if len(chosen) == k:
        return chosen
    while cand:
        if len(chosen) + cand.bit_count() < k:
            return None
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        found = _clique(adj, cand & adj[v], k, chosen + (v,))
        if found is not None:
            return found
    return None


def majority_colors(g: ColoredCompleteGraph, parts) -> ColoredCompleteGraph:
    """Complete graph on part indices; pair ``(i, j)`` is red when its red density is at least 1/2."""
    m = len(parts)
    red = [0] * m
    masks = [mask_of(p) for p in parts]
    for i in range(m):
        for j in range(i + 1, m):
            e = sum((g.red[v] & masks[j]).bit_count() for v in parts[i])
            if 2 * e >= len(parts[i]) * len(parts[j]):
                red[i] |= 1 << j
                red[j] |= 1 << i
    return ColoredCompleteGraph(m, red)


class _Scorer:
    def __init__(self, g, color, eps, threshold, params, seed):
        self.g = g
        self.color = color
        self.eps = eps
        self.threshold = threshold
        self.params = params
        self.seed = seed

    def pair_flaws(self, a, b):
        pair = VertexPair(a, b, self.g, self.color)
        flaws = []
        if density(pair) < self.threshold:
            flaws.append(("density", None))
        verdict = check_regularity(pair, self.eps, self.params.exact_check_cap,
                                   seed=self.seed, trials=self.params.heuristic_trials)
        if verdict.refuted:
            flaws.append(("irregular", verdict.witness))
        return flaws

    def score(self, parts):
        bad = []
        for i in range(len(parts)):
            for j in range(i + 1, len(parts)):
                for kind, witness in self.pair_flaws(parts[i], parts[j]):
                    bad.append((i, j, kind, witness))
        return bad


def _repair(parts, others, scorer, rng, swaps):
    parts = [list(p) for p in parts]
    others = list(others)
    bad = scorer.score(parts)
    for _ in range(swaps):
        if not bad:
            return parts
        if not others:
            return None
        i, j, kind, witness = bad[0]
        if witness is not None:
            side, pool = (i, witness[0]) if rng.random() < 0.5 else (j, witness[1])
        else:
            side, pool = (i, parts[i]) if rng.random() < 0.5 else (j, parts[j])
        out_v = rng.choice(list(pool))
        in_idx = rng.randrange(len(others))
        trial = [list(p) for p in parts]
        trial[side][trial[side].index(out_v)] = others[in_idx]
        new_bad = scorer.score(trial)
        if len(new_bad) <= len(bad):
            others[in_idx] = out_v
            parts, bad = trial, new_bad
    return parts if not bad else None


def find_regular_cylinder(
    g: ColoredCompleteGraph,
    k: int,
    eps,
    params: PipelineParams | None = None,
    vertices=None,
    seed: int = 0,
) -> Cylinder | None:
    """A ``k``-cylinder with equal parts, monochromatic by majority, with no refuted pair.

    Every pair of the returned parts has density at least
    ``1/2 - params.majority_slack`` in the returned colour and passes the
    regularity check at ``eps`` (exact when both parts fit the exact cap,
    otherwise not refuted by the randomised search). Returns None when the
    restarts are used up; that is not a proof that no such cylinder exists.
    """
    params = params or PipelineParams()
    eps = as_fraction(eps)
    pool = sorted(vertices) if vertices is not None else list(range(g.n))
    n = len(pool)
    if k < 2:
        raise PreconditionError("a cylinder needs k >= 2")
    if params.theoretical_mode:
        if n < 2 ** (2 * k):
            raise PreconditionError(f"need at least 2^(2k) = {2 ** (2 * k)} vertices, got {n}")
    elif n < k * params.min_part:
        raise PreconditionError(f"need at least k*min_part = {k * params.min_part} vertices, got {n}")
    size = params.part_size or max(params.min_part, min(params.max_part, n // (3 * k)))
    size = max(1, min(size, n // k))
    threshold = Fraction(1, 2) - params.majority_slack
    rng = random.Random(derive_seed(seed, "cylinder"))
    for attempt in range(params.cylinder_restarts):
        order = list(pool)
        rng.shuffle(order)
        count = min(n // size, 4 * k)
        cands = [sorted(order[i * size:(i + 1) * size]) for i in range(count)]
        found = find_mono_clique(majority_colors(g, cands), k)
        if found is None:
            continue
        color, idx = found
        chosen = [cands[i] for i in idx]
        used = mask_of(v for p in chosen for v in p)
        others = [v for v in pool if not used >> v & 1]
        scorer = _Scorer(g, color, eps, threshold, params, derive_seed(seed, "cylinder-check", attempt))
        parts = _repair(chosen, others, scorer, rng, params.cylinder_swaps)
        if parts is not None:
            return Cylinder(tuple(tuple(p) for p in parts), color, eps, threshold, Fraction(0))
    return None


def cylinder_flaws(g: ColoredCompleteGraph, cyl: Cylinder, threshold, params: PipelineParams | None = None, seed: int = 0):
    """Re-check a cylinder: list of ``(i, j, kind, witness)`` for failing pairs."""
    params = params or PipelineParams()
    scorer = _Scorer(g, cyl.color, cyl.eps, as_fraction(threshold), params, seed)
    return scorer.score([list(p) for p in cyl.parts])


__all__ = ["find_mono_clique", "find_regular_cylinder", "majority_colors", "cylinder_flaws"]
