"""Benchmark suites behind ``monopart bench``.

Each run prints one tab-separated line:
``n  family  seed  pieces  oracle_pieces_or_NA  wall_ms  verified``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from monopart.certificate import verify_certificate
from monopart.families import family_from_spec
from monopart.generate import random_coloring
from monopart.oracle import min_partition_exact
from monopart.params import PipelineParams, derive_seed
from monopart.pipeline import partition

SUITES = {
    # name: (sizes, densities, families, runs per cell, run the oracle)
    "small": ((5, 6, 7, 8), (0.3, 0.5, 0.7), ("matchings", "cycles"), 2, True),
    "pipeline": ((50, 100, 200, 300), (0.1, 0.3, 0.5, 0.7, 0.9), ("paths", "cycles", "cycle_power(2)"), 1, False),
    "quick": ((10, 40), (0.5,), ("paths", "cycles"), 1, True),
}


@dataclass
class BenchRow:
    n: int
    family: str
    seed: int
    pieces: int
    oracle_pieces: int | None
    wall_ms: float
    verified: bool

    def line(self) -> str:
        oracle = "NA" if self.oracle_pieces is None else str(self.oracle_pieces)
        return "\t".join([str(self.n), self.family, str(self.seed), str(self.pieces), oracle,
                          f"{self.wall_ms:.1f}", "yes" if self.verified else "no"])


def run_suite(name: str, seed: int = 0, params: PipelineParams | None = None):
    """Yield one :class:`BenchRow` per run of suite ``name``."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}")
    sizes, densities, families, reps, with_oracle = SUITES[name]
    params = params or PipelineParams()
    for spec in families:
        fam = family_from_spec(spec)
        for n in sizes:
            for p in densities:
                for r in range(reps):
                    run_seed = derive_seed(seed, name, spec, n, p, r) % (1 << 31)
                    g = random_coloring(n, p, run_seed)
                    start = time.perf_counter()
                    cert = partition(g, fam, fam, params.with_(seed=run_seed))
                    wall = (time.perf_counter() - start) * 1000
                    ok = verify_certificate(g, fam, fam, cert).ok
                    best = None
                    if with_oracle and n <= params.oracle_cap:
                        best = min_partition_exact(g, fam, fam, cap=params.oracle_cap)[0]
                    yield BenchRow(n, spec, run_seed, len(cert.pieces), best, wall, ok)
