"""Tunable constants of the partition pipeline and seed derivation."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field, replace
from fractions import Fraction

from monopart.graph import as_fraction


def derive_seed(seed: int, *labels) -> int:
    """Deterministic 64-bit sub-seed for ``labels`` under a master ``seed``."""
    text = "/".join([str(seed), *map(str, labels)])
    return int.from_bytes(hashlib.sha256(text.encode()).digest()[:8], "big")


@dataclass(frozen=True)
class PipelineParams:
    """Everything that steers a partition run.

    The asymptotic values (``eps = 2**(-C2*Delta)``, the part-size factor
    ``eta``) are far too small to execute with; :func:`theoretical_values`
    reports them for a given maximum degree while the fields below carry the
    practical overrides that actually drive the search.

    ``delta`` and ``k`` default to ``1/(2*Delta)`` and ``Delta + 2`` (or 3 in
    bipartite mode) when left as None.
    """

    epsilon: Fraction = Fraction(9, 20)
    delta: Fraction | None = None
    d: Fraction = Fraction(1, 2)
    k: int | None = None
    piece_budget: int = 4096
    search_time_limit: float = 50.0
    seed: int = 0
    theoretical_mode: bool = False

    min_part: int = 8
    part_size: int | None = None
    max_part: int = 14
    small_n_threshold: int = 8
    exact_check_cap: int = 12
    oracle_cap: int = 12
    cover_ratio: Fraction = Fraction(1, 4)
    copy_nodes: int = 4000
    shortcut_nodes: int = 20000
    embed_nodes: int = 6000
    embed_restarts: int = 4
    heuristic_trials: int = 24
    cylinder_restarts: int = 6
    cylinder_swaps: int = 60
    majority_slack: Fraction = Fraction(0)
    extra: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        for name in ("epsilon", "d", "cover_ratio", "majority_slack"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))
        if self.delta is not None:
            object.__setattr__(self, "delta", as_fraction(self.delta))
        if not 0 < self.epsilon < 1:
            raise ValueError("epsilon must lie in (0, 1)")
        if not 0 < self.d < 1:
            raise ValueError("d must lie in (0, 1)")
        if self.delta is not None and not 0 < self.delta < 1:
            raise ValueError("delta must lie in (0, 1)")
        if self.k is not None and self.k < 2:
            raise ValueError("k must be at least 2")
        if self.piece_budget < 1:
            raise ValueError("piece_budget must be positive")
        if not 0 < self.cover_ratio <= 1:
            raise ValueError("cover_ratio must lie in (0, 1]")

    def with_(self, **changes) -> "PipelineParams":
        return replace(self, **changes)

    def delta_for(self, max_degree: int) -> Fraction:
        if self.delta is not None:
            return self.delta
        return Fraction(1, 2 * max(1, max_degree))

    def k_for(self, max_degree: int, bipartite: bool = False) -> int:
        if self.k is not None:
            return self.k
        return 3 if bipartite else max(1, max_degree) + 2


def theoretical_values(max_degree: int, c2: float = 1.0) -> dict:
    """The asymptotic parameter choices for maximum degree ``max_degree``.

    ``c2`` stands in for the unspecified absolute constant in
    ``eps = 2**(-c2*Delta)``; every true value is at least as extreme as the
    one reported for ``c2 = 1``. Magnitudes are returned as base-2 logarithms
    because ``eta`` underflows any float.
    """
    D = max(2, max_degree)
    k = D + 2
    log2_eps = -c2 * D
    # eta = 1/(2*2^(2k)) * (eps/2)^(2^(4k) * (eps/2)^(-5))
    log2_half_eps = log2_eps - 1
    exponent_log2 = 4 * k - 5 * log2_half_eps  # log2 of 2^(4k) * (eps/2)^(-5)
    log2_eta = -1 - 2 * k + log2_half_eps * 2.0 ** exponent_log2
    return {
        "Delta": D,
        "k": k,
        "delta": Fraction(1, 2 * D),
        "log2_epsilon": log2_eps,
        "log2_eta": log2_eta,
        "min_n_for_cylinder": 2 ** (2 * k),
        "formulas": {
            "epsilon": f"2^(-C2*{D})",
            "k": f"{D}+2 = {k}",
            "eta": f"1/(2*2^{2 * k}) * (eps/2)^(2^{4 * k} * (eps/2)^-5)",
            "delta": f"1/(2*{D})",
            "blow_up_requirement": f"eps < 1/(4*(32*{D}^2*({D}+2)*8^{D})^C_BL)",
            "cover_ratio": f"2^(-C1*{D}*log({D}))",
            "piece_bound": f"2^(C*(chi1+chi2+{D})*log({D}))",
        },
    }
