"""Partition a 2-coloured complete graph into monochromatic family copies.

The absorbing procedure: reserve a dense red cylinder, cover most of the
other vertices by iterated extraction, push the few leftovers into the
cylinder, set aside vertices with too few red neighbours in some part
(partitioned recursively against a reduced blue family and glued back into
the cylinder), and finally cover the cylinder itself with at most ``k + 1``
copies. Whenever a stage fails the run falls back to plain extraction, so a
valid certificate always comes out.
"""

from __future__ import annotations

import math
import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from monopart.certificate import CertPiece, PartitionCertificate, verify_certificate
from monopart.cylinders import find_regular_cylinder
from monopart.embedding import cover_cylinder, embedding_problems, greedy_bipartite_extend, Embedding
from monopart.errors import BudgetError, CoverFailure, PreconditionError, StuckError
from monopart.families import GraphFamily, doubled_family, family_minus_class
from monopart.graph import BLUE, RED, Color, ColoredCompleteGraph, Cylinder, mask_of
from monopart.oracle import min_partition_exact
from monopart.params import PipelineParams, derive_seed
from monopart.ramsey import cover_most, find_mono_copy


@dataclass(frozen=True)
class GoodBadReport:
    good: frozenset
    bad_classes: tuple

    @property
    def bad(self) -> frozenset:
        return frozenset().union(*self.bad_classes) if self.bad_classes else frozenset()


def classify_good(cyl, host: ColoredCompleteGraph, delta, color: Color | None = None) -> GoodBadReport:
    """Split the cylinder vertices into good ones and the bad classes ``B_i``.

    ``cyl`` is a :class:`Cylinder` or a list of parts. A vertex is good for
    part ``i`` when it lies in that part or has at least ``delta*|V_i|/2``
    neighbours there in the cylinder colour; it goes to ``B_i`` for the first
    ``i`` where this fails.
    """
    if isinstance(cyl, Cylinder):
        parts, color = cyl.parts, color or cyl.color
    else:
        parts = [tuple(p) for p in cyl]
    color = color or RED
    if not parts or any(not p for p in parts):
        raise PreconditionError("every part must be nonempty")
    delta = Fraction(delta)
    adj = host.adj(color)
    masks = [mask_of(p) for p in parts]
    good, bad = set(), [set() for _ in parts]
    for p in parts:
        for v in p:
            for i, m in enumerate(masks):
                if m >> v & 1:
                    continue
                if 2 * (adj[v] & m).bit_count() < delta * len(parts[i]):
                    bad[i].add(v)
                    break
            else:
                good.add(v)
    return GoodBadReport(frozenset(good), tuple(frozenset(b) for b in bad))


@dataclass(frozen=True, eq=False)
class Piece:
    """A copy of ``family.member(len(mapping))``; ``color`` refers to the input graph."""

    color: Color
    family: GraphFamily
    mapping: tuple

    @property
    def n(self):
        return len(self.mapping)


@dataclass
class _Run:
    g: ColoredCompleteGraph
    params: PipelineParams
    deadline: float
    k: int
    delta: Fraction
    events: Counter = field(default_factory=Counter)
    emitted: list = field(default_factory=list)
    dead: set = field(default_factory=set)
    _swapped: ColoredCompleteGraph | None = None
    _reduced: dict = field(default_factory=dict)

    # orientation: ``flipped`` means red/blue are exchanged relative to the input

    def host(self, flipped):
        if not flipped:
            return self.g
        if self._swapped is None:
            self._swapped = self.g.swapped()
        return self._swapped

    def piece(self, flipped, color, family, mapping):
        p = Piece(color.other if flipped else color, family, tuple(mapping))
        self.emitted.append(p)
        live = len(self.emitted) - len(self.dead)
        if live > self.params.piece_budget:
            raise BudgetError(f"piece budget {self.params.piece_budget} exhausted", partial=self.partial())
        return p

    def discard(self, pieces):
        self.dead.update(id(p) for p in pieces)

    def partial(self):
        return [p for p in self.emitted if id(p) not in self.dead]

    def late(self):
        return time.monotonic() > self.deadline

    def reduced(self, fam):
        key = id(fam)
        if key not in self._reduced:
            self._reduced[key] = (fam, family_minus_class(fam))
        return self._reduced[key][1]

    # entry point for a vertex set

    def solve(self, flipped, vertices, f1, f2, label):
        vertices = sorted(vertices)
        if not vertices:
            return []
        G = self.host(flipped)
        if _prefers_blue(G, vertices):
            return self._solve(not flipped, vertices, f2, f1, label)
        return self._solve(flipped, vertices, f1, f2, label)

    def _solve(self, flipped, V, f1, f2, label):
        G = self.host(flipped)
        n = len(V)
        params = self.params
        if n > 1 and not self.late():
            try:
                F1, F2 = f1.member(n), f2.member(n)
            except PreconditionError:
                F1 = None
            if F1 is not None:
                found = find_mono_copy(G, V, F1, F2, params.shortcut_nodes)
                if found is not None:
                    color, emb = found
                    self.events["spanning copy"] += 1
                    return [self.piece(flipped, color, f1 if color is RED else f2, emb.mapping)]
        if f1.chi == 1 or f2.chi == 1:
            color, fam = (RED, f1) if f1.chi == 1 else (BLUE, f2)
            self.events["independent set"] += 1
            return [self.piece(flipped, color, fam, V)]
        if n < params.small_n_threshold:
            return self._small(flipped, V, f1, f2)
        if self.late() or n < self.k * params.min_part:
            return self._extract(flipped, V, f1, f2, label)
        try:
            cyl = find_regular_cylinder(G, self.k, params.epsilon, params, vertices=V,
                                        seed=derive_seed(params.seed, label, "cylinder"))
        except PreconditionError:
            cyl = None
        if cyl is None:
            self.events["no cylinder"] += 1
            return self._extract(flipped, V, f1, f2, label)
        self.events["cylinder"] += 1
        if cyl.color is BLUE:
            # same argument with the colours exchanged
            flipped, f1, f2 = not flipped, f2, f1
        red_cyl = Cylinder(cyl.parts, RED, cyl.eps, cyl.d, cyl.delta)
        return self._absorb(flipped, V, f1, f2, red_cyl, label)

    def _small(self, flipped, V, f1, f2):
        G = self.host(flipped)
        if len(V) > self.params.oracle_cap:
            self.events["singletons"] += len(V)
            return [self.piece(flipped, RED, f1, (v,)) for v in V]
        _, cert = min_partition_exact(G.induced(V), f1, f2, cap=self.params.oracle_cap)
        self.events["oracle"] += 1
        out = []
        for cp in cert.pieces:
            out.append(self.piece(flipped, cp.color, f1 if cp.color is RED else f2, [V[i] for i in cp.mapping]))
        return out

    def _cover(self, flipped, V, f1, f2, eps):
        G = self.host(flipped)
        left_budget = self.params.piece_budget - (len(self.emitted) - len(self.dead))
        try:
            embs, leftovers = cover_most(G, V, f1, f2, eps, self.params, max(left_budget, 0), self.deadline)
        except BudgetError as exc:
            embs = exc.partial[0]
            pieces = [Piece(e.color.other if flipped else e.color, f1 if e.color is RED else f2, e.mapping)
                      for e in embs]
            raise BudgetError(str(exc), partial=self.partial() + pieces) from None
        pieces = [self.piece(flipped, e.color, f1 if e.color is RED else f2, e.mapping) for e in embs]
        return pieces, leftovers

    def _extract(self, flipped, V, f1, f2, label):
        """Iterated extraction down to fewer than ``small_n_threshold`` vertices, then the oracle."""
        self.events["extraction"] += 1
        t = self.params.small_n_threshold
        if len(V) < t:
            return self.solve(flipped, V, f1, f2, label + "/tail")
        pieces, left = self._cover(flipped, V, f1, f2, Fraction(max(t - 1, 1), len(V)))
        return pieces + self.solve(flipped, left, f1, f2, label + "/tail")

    def _absorb(self, flipped, V, f1, f2, cyl, label):
        G = self.host(flipped)
        params = self.params
        parts = [list(p) for p in cyl.parts]
        k = len(parts)
        cap = math.floor(params.epsilon * min(len(p) for p in parts))
        inside = set().union(*map(set, parts))
        rest = [v for v in V if v not in inside]
        pieces = []
        leftovers = rest
        if rest and k * cap < len(rest):
            eps = Fraction(k * cap, len(rest)) if cap else Fraction(1, 2 * len(rest))
            pieces, leftovers = self._cover(flipped, rest, f1, f2, eps)
        added = [0] * k
        excess = []
        for v in leftovers:
            open_parts = [i for i in range(k) if added[i] < cap]
            if not open_parts:
                excess.append(v)
                continue
            i = min(open_parts, key=lambda j: (len(parts[j]), j))
            parts[i].append(v)
            added[i] += 1
        if excess:
            self.events["excess leftovers"] += len(excess)
            pieces += self._extract(flipped, excess, f1, f2, label + "/excess")
        parts = [sorted(p) for p in parts]
        report = classify_good(parts, G, self.delta, RED)
        bad_all = report.bad
        avail = [[v for v in p if v not in bad_all] for p in parts]
        for i, B in enumerate(report.bad_classes):
            if B:
                self.events["bad vertices"] += len(B)
                pieces += self._bad_class(flipped, i, sorted(B), f1, f2, avail, label + f"/B{i}")
        pieces += self._cover_parts(flipped, avail, f1, f2, label)
        return pieces

    def _bad_class(self, flipped, i, B, f1, f2, avail, label):
        G = self.host(flipped)
        mark = len(self.emitted)
        try:
            f2r = self.reduced(f2)
            sub = self.solve(flipped, B, f1, f2r, label)
        except (PreconditionError, CoverFailure):
            # e.g. a directory family without the member sizes the reduction needs
            self.events["reduction unavailable"] += 1
            self.discard(self.emitted[mark:])
            return self.solve(flipped, B, f1, f2, label + "/plain")
        keep, glue = [], []
        for p in sub:
            if p.family is not f2r:
                keep.append(p)
            elif p.n == 1:
                # member(1) is a single vertex in every family
                self.discard([p])
                keep.append(self.piece(flipped, BLUE, f2, p.mapping))
            else:
                glue.append(p)
        if not glue:
            return keep
        H, phi, spans = None, {}, []
        for p in glue:
            rec = f2r.reconstruct(p.n)
            off = 0 if H is None else H.n
            H = rec.source if H is None else H.disjoint_union(rec.source)
            for idx, s in enumerate(rec.kept):
                phi[off + s] = p.mapping[idx]
            spans.append((off, rec.source.n))
        images = sorted(phi.values())
        order = list(range(len(avail)))
        ext = None
        for checked in (True, False):
            for j in order:
                try:
                    ext = greedy_bipartite_extend(H, phi, G, images, avail[j], color=BLUE, checked=checked)
                except (PreconditionError, StuckError):
                    continue
                target = j
                break
            if ext is not None:
                break
        if ext is None:
            self.events["glue fallback"] += 1
            self.discard(sub)
            return self.solve(flipped, B, f1, f2, label + "/plain")
        self.events["glued"] += len(glue)
        used = {ext[v] for v in range(H.n) if v not in phi}
        avail[target] = [v for v in avail[target] if v not in used]
        self.discard(glue)
        for off, size in spans:
            mapping = tuple(ext[off + s] for s in range(size))
            problems = embedding_problems(Embedding(f2.member(size), mapping, BLUE), G)
            if problems:
                raise AssertionError(problems[0])
            keep.append(self.piece(flipped, BLUE, f2, mapping))
        return keep

    def _cover_parts(self, flipped, avail, f1, f2, label):
        G = self.host(flipped)
        left = sorted(v for p in avail for v in p)
        if not left:
            return []
        if any(not p for p in avail):
            return self._extract(flipped, left, f1, f2, label + "/cylinder")
        cyl = Cylinder(tuple(tuple(p) for p in avail), RED)
        try:
            embs = cover_cylinder(cyl, f1, G, seed=derive_seed(self.params.seed, label, "cover"),
                                  node_budget=self.params.embed_nodes, restarts=self.params.embed_restarts)
        except CoverFailure as exc:
            self.events["cylinder cover failed"] += 1
            embs = exc.partial
        except PreconditionError:
            self.events["cylinder cover refused"] += 1
            embs = []
        pieces = [self.piece(flipped, RED, f1, e.mapping) for e in embs]
        covered = {v for e in embs for v in e.mapping}
        rest = [v for v in left if v not in covered]
        if rest:
            pieces += self._extract(flipped, rest, f1, f2, label + "/cylinder")
        else:
            self.events["cylinder covered"] += 1
        return pieces


def _prefers_blue(G: ColoredCompleteGraph, V) -> bool:
    """Orientation rule; exactly one of a colouring and its swap prefers blue (n >= 2)."""
    mask = mask_of(V)
    red = sum((G.red[v] & mask).bit_count() for v in V)
    blue = sum((G.blue[v] & mask).bit_count() for v in V)
    if red != blue:
        return blue > red
    return tuple(G.blue[v] & mask for v in V) > tuple(G.red[v] & mask for v in V)


def _certificate(g, pieces, events):
    cert = PartitionCertificate(g.n, [CertPiece(p.color, p.family.name, p.mapping) for p in pieces])
    cert.notes["events"] = dict(events)
    return cert


def partition(g: ColoredCompleteGraph, fam1: GraphFamily, fam2: GraphFamily,
              params: PipelineParams | None = None) -> PartitionCertificate:
    """Vertex-disjoint red ``fam1`` copies and blue ``fam2`` copies covering ``g``.

    The certificate is checked with :func:`verify_certificate` before it is
    returned. Raises :class:`BudgetError` (with a partial certificate) when
    more than ``params.piece_budget`` pieces would be needed.
    """
    pieces, events = _run(g, fam1, fam2, params or PipelineParams())
    cert = _certificate(g, pieces, events)
    verdict = verify_certificate(g, fam1, fam2, cert)
    if not verdict.ok:
        raise AssertionError(f"pipeline produced an invalid certificate: {verdict.violations[0]}")
    return cert


def _run(g, fam1, fam2, params):
    for fam in (fam1, fam2):
        if fam.chi is None or fam.chi < 1:
            raise PreconditionError(f"family {fam.name} has no chromatic number")
    D = max(fam1.max_degree, fam2.max_degree, 1)
    k = params.k or params.k_for(D)
    delta = params.delta if params.delta is not None else params.delta_for(D)
    run = _Run(g, params, time.monotonic() + params.search_time_limit, k, Fraction(delta))
    try:
        pieces = run.solve(False, range(g.n), fam1, fam2, "root")
    except BudgetError as exc:
        partial = exc.partial if isinstance(exc.partial, list) else run.partial()
        raise BudgetError(str(exc), partial=_certificate(g, partial, run.events)) from None
    return pieces, run.events


def partition_bipartite(g: ColoredCompleteGraph, fam: GraphFamily,
                        params: PipelineParams | None = None) -> PartitionCertificate:
    """Partition into copies of a bipartite family, in either colour.

    Runs with three-part cylinders and the doubled family in both roles,
    then splits every doubled copy into its (at most three) blocks.
    """
    if not fam.bipartite:
        raise PreconditionError(f"family {fam.name} is not bipartite")
    params = (params or PipelineParams()).with_(k=3)
    dfam = doubled_family(fam)
    pieces, events = _run(g, dfam, dfam, params)
    out = []
    for p in pieces:
        for off, size in dfam.decompose(p.n):
            out.append(CertPiece(p.color, fam.name, p.mapping[off:off + size]))
    cert = PartitionCertificate(g.n, out)
    cert.notes["events"] = dict(events)
    verdict = verify_certificate(g, fam, fam, cert)
    if not verdict.ok:
        raise AssertionError(f"pipeline produced an invalid certificate: {verdict.violations[0]}")
    return cert


__all__ = ["GoodBadReport", "Piece", "classify_good", "partition", "partition_bipartite"]
