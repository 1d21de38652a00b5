"""Densities, epsilon-regularity and super-regularity of vertex pairs.

Densities are exact :class:`~fractions.Fraction` values so that witness
checks never depend on rounding. A pair over a coloured complete graph looks
at one colour class; because that class and its complement have densities
summing to one on every sub-pair, a pair is regular in one colour exactly when
it is regular in the other.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction

from monopart import kernels
from monopart.errors import PreconditionError, SizeError
from monopart.graph import Color, ColoredCompleteGraph, Graph, as_fraction, iter_bits, mask_of


@dataclass(frozen=True)
class VertexPair:
    """Two disjoint vertex sets of a host graph or of one colour class."""

    a: tuple[int, ...]
    b: tuple[int, ...]
    host: Graph | ColoredCompleteGraph
    color: Color | None = None

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))
        if set(self.a) & set(self.b):
            raise PreconditionError("the two sides of a pair must be disjoint")
        if isinstance(self.host, ColoredCompleteGraph) and self.color is None:
            raise PreconditionError("a pair over a coloured graph needs a colour")

    def adjacency(self) -> tuple[int, ...]:
        if isinstance(self.host, ColoredCompleteGraph):
            return self.host.adj(self.color)
        return self.host.adj

    def edge_count(self) -> int:
        adj = self.adjacency()
        mb = mask_of(self.b)
        return sum((adj[v] & mb).bit_count() for v in self.a)

    def right_columns(self) -> list[int]:
        """For each vertex of ``b``, its neighbours in ``a`` as a mask over positions in ``a``."""
        adj = self.adjacency()
        index = {v: i for i, v in enumerate(self.a)}
        ma = mask_of(self.a)
        cols = []
        for y in self.b:
            c = 0
            for v in iter_bits(adj[y] & ma):
                c |= 1 << index[v]
            cols.append(c)
        return cols

    def swapped(self) -> "VertexPair":
        return VertexPair(self.b, self.a, self.host, self.color)

    def restrict(self, a, b) -> "VertexPair":
        return VertexPair(tuple(a), tuple(b), self.host, self.color)


def density(pair: VertexPair) -> Fraction:
    """``e(A, B) / (|A| |B|)`` over the pair's host (or colour class)."""
    if not pair.a or not pair.b:
        raise PreconditionError("density needs two nonempty sets")
    return Fraction(pair.edge_count(), len(pair.a) * len(pair.b))


class Verdict(enum.Enum):
    REGULAR = "regular"
    IRREGULAR = "irregular"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class RegularityVerdict:
    verdict: Verdict
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    checked_exactly: bool = False
    deviation: Fraction | None = None

    @property
    def refuted(self) -> bool:
        return self.verdict is Verdict.IRREGULAR


def is_witness(pair: VertexPair, x, y, eps) -> bool:
    """True when ``(x, y)`` violates eps-regularity of ``pair``."""
    eps = as_fraction(eps)
    x, y = tuple(x), tuple(y)
    if not (len(x) > eps * len(pair.a) and len(y) > eps * len(pair.b)):
        return False
    if not set(x) <= set(pair.a) or not set(y) <= set(pair.b):
        return False
    return abs(density(pair.restrict(x, y)) - density(pair)) >= eps


def _irregular(pair, xs, ys, eps, exact):
    dev = abs(density(pair.restrict(xs, ys)) - density(pair))
    # every reported witness is re-derived from densities, never trusted
    if not (dev >= eps and len(xs) > eps * len(pair.a) and len(ys) > eps * len(pair.b)):
        raise AssertionError("kernel returned an invalid irregularity witness")
    return RegularityVerdict(Verdict.IRREGULAR, (xs, ys), exact, dev)


def check_regularity_exact(pair: VertexPair, eps, cap: int = 12, backend=None) -> RegularityVerdict:
    """Decide eps-regularity of ``pair`` exactly.

    Each side may have at most ``cap`` vertices; larger pairs must use
    :func:`check_regularity_heuristic`.
    """
    eps = as_fraction(eps)
    if not pair.a or not pair.b:
        raise PreconditionError("regularity needs two nonempty sets")
    if len(pair.a) > cap or len(pair.b) > cap:
        raise SizeError(
            f"pair {len(pair.a)}x{len(pair.b)} exceeds the exact-check cap {cap}; "
            "use check_regularity_heuristic"
        )
    a, b = len(pair.a), len(pair.b)
    found = kernels.regularity_scan(pair.right_columns(), a, b, eps.numerator, eps.denominator, backend=backend)
    if found is None:
        return RegularityVerdict(Verdict.REGULAR, None, True, None)
    xmask, ymask = found
    xs = tuple(pair.a[i] for i in iter_bits(xmask))
    ys = tuple(pair.b[i] for i in iter_bits(ymask))
    return _irregular(pair, xs, ys, eps, True)


def _best_against(lines, fixed_mask, fixed_size, n_other, min_other, total, a_times_b):
    """Best subset of the free side against a fixed subset of the other side.

    ``lines[j]`` holds the neighbours (on the fixed side) of free vertex ``j``.
    Returns ``(deviation, mask)`` maximising ``|d(X, Y) - d(A, B)|`` over all
    free subsets of size at least ``min_other``.
    """
    ranked = sorted(((lines[j] & fixed_mask).bit_count(), j) for j in range(n_other))
    prefix = [0]
    for deg, _ in ranked:
        prefix.append(prefix[-1] + deg)
    best = (Fraction(-1), 0)
    d = Fraction(total, a_times_b)
    for s in range(min_other, n_other + 1):
        hi = prefix[n_other] - prefix[n_other - s]
        for e, chosen in ((hi, ranked[n_other - s:]), (prefix[s], ranked[:s])):
            dev = abs(Fraction(e, fixed_size * s) - d)
            if dev > best[0]:
                best = (dev, mask_of(j for _, j in chosen))
    return best


def check_regularity_heuristic(pair: VertexPair, eps, seed: int = 0, trials: int = 32, rounds: int = 4) -> RegularityVerdict:
    """Randomised search for an irregularity witness.

    Each trial samples a random left subset, then alternates between the
    optimal right subset for the current left subset and the optimal left
    subset for the current right subset (both computable exactly by sorting
    degrees). Returns IRREGULAR with a re-checked witness, else UNKNOWN.
    """
    eps = as_fraction(eps)
    if not pair.a or not pair.b:
        raise PreconditionError("regularity needs two nonempty sets")
    a, b = len(pair.a), len(pair.b)
    min_a = int(eps * a) + 1
    min_b = int(eps * b) + 1
    if trials <= 0 or min_a > a or min_b > b:
        return RegularityVerdict(Verdict.UNKNOWN)
    cols = pair.right_columns()
    rows = [0] * a
    for j, c in enumerate(cols):
        for i in iter_bits(c):
            rows[i] |= 1 << j
    total = sum(c.bit_count() for c in cols)
    ab = a * b
    rng = random.Random(seed)
    for _ in range(trials):
        xmask = mask_of(rng.sample(range(a), rng.randint(min_a, a)))
        for _ in range(rounds):
            dev, ymask = _best_against(cols, xmask, xmask.bit_count(), b, min_b, total, ab)
            if dev >= eps:
                return _found(pair, xmask, ymask, eps)
            dev, new_x = _best_against(rows, ymask, ymask.bit_count(), a, min_a, total, ab)
            if dev >= eps:
                return _found(pair, new_x, ymask, eps)
            if new_x == xmask:
                break
            xmask = new_x
    return RegularityVerdict(Verdict.UNKNOWN)


def _found(pair, xmask, ymask, eps):
    xs = tuple(pair.a[i] for i in iter_bits(xmask))
    ys = tuple(pair.b[i] for i in iter_bits(ymask))
    return _irregular(pair, xs, ys, eps, False)


def check_regularity(pair: VertexPair, eps, cap: int = 12, seed: int = 0, trials: int = 32) -> RegularityVerdict:
    """Exact check when both sides fit under ``cap``, heuristic otherwise."""
    if len(pair.a) <= cap and len(pair.b) <= cap:
        return check_regularity_exact(pair, eps, cap)
    return check_regularity_heuristic(pair, eps, seed, trials)


@dataclass(frozen=True)
class SuperRegularityReport:
    regularity: RegularityVerdict
    density: Fraction
    density_ok: bool
    low_degree_a: tuple[int, ...] = field(default=())
    low_degree_b: tuple[int, ...] = field(default=())

    @property
    def degrees_ok(self) -> bool:
        return not self.low_degree_a and not self.low_degree_b

    @property
    def ok(self) -> bool:
        return self.density_ok and self.degrees_ok and not self.regularity.refuted

    def __bool__(self):
        return self.ok

    def describe(self) -> str:
        parts = [f"regularity={self.regularity.verdict.value}"]
        parts.append(f"density={self.density} ({'ok' if self.density_ok else 'too low'})")
        if self.low_degree_a:
            parts.append(f"low-degree vertices in A: {list(self.low_degree_a)}")
        if self.low_degree_b:
            parts.append(f"low-degree vertices in B: {list(self.low_degree_b)}")
        return "; ".join(parts)


def check_super_regular(pair: VertexPair, eps, d, delta, cap: int = 12, seed: int = 0, trials: int = 32) -> SuperRegularityReport:
    """Report the three super-regularity conditions separately.

    Regularity is decided exactly when both sides fit under ``cap`` and
    otherwise only refuted (never confirmed) by the heuristic search.
    """
    eps, d, delta = as_fraction(eps), as_fraction(d), as_fraction(delta)
    if not pair.a or not pair.b:
        raise PreconditionError("super-regularity needs two nonempty sets")
    reg = check_regularity(pair, eps, cap, seed, trials)
    dens = density(pair)
    adj = pair.adjacency()
    ma, mb = mask_of(pair.a), mask_of(pair.b)
    low_a = tuple(v for v in pair.a if (adj[v] & mb).bit_count() < delta * len(pair.b))
    low_b = tuple(v for v in pair.b if (adj[v] & ma).bit_count() < delta * len(pair.a))
    return SuperRegularityReport(reg, dens, dens >= d, low_a, low_b)


def slice_params(eps, d, beta):
    """Parameters inherited by a slice ``A' x B'`` with ``|A'| >= beta|A|``, ``|B'| >= beta|B|``.

    Returns ``(eps_prime, (d_low, d_high))`` with ``eps_prime = max(eps/beta, 2*eps)``;
    the slice density lies strictly inside ``(d - eps, d + eps)``.
    """
    for name, value in (("eps", eps), ("d", d), ("beta", beta)):
        if not 0 < value < 1:
            raise PreconditionError(f"{name} must lie in (0, 1)")
    if beta <= eps:
        raise PreconditionError(f"slicing needs beta > eps (got beta={beta}, eps={eps})")
    return max(eps / beta, 2 * eps), (d - eps, d + eps)
