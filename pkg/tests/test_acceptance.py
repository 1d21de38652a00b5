"""Acceptance suite: nine criteria, each reported as one PASS/FAIL line.

Run under pytest (the lines appear in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""

import itertools
import math
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import naive  # noqa: E402
from monopart.certificate import CertPiece, PartitionCertificate, verify_certificate  # noqa: E402
from monopart.embedding import Embedding, cover_cylinder, embedding_problems, greedy_bipartite_extend, residues  # noqa: E402
from monopart.equitable import equitable_color  # noqa: E402
from monopart.families import builtin, edgeless_family, lower_bound_family  # noqa: E402
from monopart.generate import random_coloring  # noqa: E402
from monopart.graph import BLUE, RED, ColoredCompleteGraph, Cylinder, Graph, complete_graph  # noqa: E402
from monopart.kernels import available_backends  # noqa: E402
from monopart.oracle import min_partition_exact  # noqa: E402
from monopart.params import PipelineParams  # noqa: E402
from monopart.pipeline import partition  # noqa: E402
from monopart.ramsey import find_mono_copy  # noqa: E402
from monopart.regularity import Verdict, VertexPair, check_regularity_exact, check_super_regular, density  # noqa: E402

RESULTS: dict[int, tuple[bool, str, str]] = {}


def record(num, title, ok, detail):
    RESULTS[num] = (ok, title, detail)
    return ok


def summary_lines():
    return [f"[{'PASS' if ok else 'FAIL'}] {num}. {title}: {detail}"
            for num, (ok, title, detail) in sorted(RESULTS.items())]


# 1 -------------------------------------------------------------------------

def extension_instance(rng, D, nb):
    na = rng.randint(1, 3 * nb)
    H_edges = []
    for b in range(nb):
        for a in rng.sample(range(na), min(na, rng.randint(1, D))):
            H_edges.append((a, na + b))
    H = Graph(na + nb, H_edges)
    bp = list(range(na, na + 2 * nb))
    need = math.ceil((1 - Fraction(1, 2 * D)) * len(bp))
    host_edges = set()
    for a in range(na):
        # adversarial-ish: the allowed non-neighbours are taken from the front of B'
        skip = set(rng.sample(bp, len(bp) - need)) if rng.random() < 0.5 else set(bp[: len(bp) - need])
        host_edges.update((a, h) for h in bp if h not in skip)
    host = Graph(na + 2 * nb, sorted(host_edges))
    return H, {a: a for a in range(na)}, host, list(range(na)), bp


def criterion_1():
    rng = random.Random(8)
    cases = [extension_instance(rng, rng.randint(1, 4), rng.randint(1, 40)) for _ in range(1000)]
    ok = 0
    start = time.perf_counter()
    for H, phi, host, ap, bp in cases:
        D = max(1, max(H.degree(v) for v in range(H.n) if v not in phi))
        out = greedy_bipartite_extend(H, phi, host, ap, bp, max_degree=D)
        emb = Embedding(H, [out[v] for v in range(H.n)], None)
        ok += not embedding_problems(emb, host)
    elapsed = time.perf_counter() - start
    passed = ok == 1000 and elapsed < 10
    return record(1, "greedy bipartite extension", passed, f"{ok}/1000 verified, {elapsed:.2f}s (< 10s)")


# 2 -------------------------------------------------------------------------

def criterion_2():
    fams = [builtin("paths"), builtin("cycles"), builtin("cycle_power", 2)]
    grid = list(itertools.product((50, 100, 200, 300), (0.1, 0.3, 0.5, 0.7, 0.9), fams))
    runs = valid = within = 0
    worst = 0.0
    for shortcut in (PipelineParams().shortcut_nodes, 0):
        for i, (n, p, fam) in enumerate(grid):
            g = random_coloring(n, p, 1000 + i)
            params = PipelineParams(seed=i, shortcut_nodes=shortcut)
            t = time.perf_counter()
            cert = partition(g, fam, fam, params)
            dt = time.perf_counter() - t
            worst = max(worst, dt)
            runs += 1
            valid += verify_certificate(g, fam, fam, cert).ok
            within += len(cert.pieces) <= params.piece_budget
    passed = valid == runs and within == runs and worst < 60
    return record(2, "pipeline validity", passed,
                  f"{valid}/{runs} certificates accepted, {within}/{runs} within budget, slowest run {worst:.2f}s (< 60s)")


# 3 -------------------------------------------------------------------------

def criterion_3():
    rng = random.Random(3)
    M, C = builtin("matchings"), builtin("cycles")
    pairs = [(M, M), (C, C), (M, C), (C, M)]
    ge = agree = small = 0
    for i in range(200):
        n = rng.randint(1, 8)
        g = random_coloring(n, rng.choice((0.2, 0.5, 0.8)), 500 + i)
        f1, f2 = pairs[i % 4]
        best, cert = min_partition_exact(g, f1, f2)
        assert verify_certificate(g, f1, f2, cert).ok
        ge += best <= len(partition(g, f1, f2, PipelineParams(seed=i)).pieces)
        if n <= 6:
            small += 1
            col = naive.color_fn(g)
            agree += best == naive.min_partition(n, col, lambda m: f1.member(m).edges, lambda m: f2.member(m).edges)
    passed = ge == 200 and agree == small
    return record(3, "oracle consistency", passed,
                  f"oracle <= pipeline on {ge}/200, branch and bound = set partitions on {agree}/{small} (n <= 6)")


# 4 -------------------------------------------------------------------------

def bounded_graph(rng, n, D):
    deg = [0] * n
    edges = []
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rng.shuffle(pairs)
    for i, j in pairs[: 6 * n * D]:
        if deg[i] < D and deg[j] < D:
            edges.append((i, j))
            deg[i] += 1
            deg[j] += 1
    return Graph(n, edges)


def criterion_4():
    rng = random.Random(4)
    ok = 0
    for i in range(1000):
        g = bounded_graph(rng, rng.randint(1, 200), rng.randint(0, 8))
        col = equitable_color(g, g.max_degree + 1, seed=i)
        ok += naive.is_proper_equitable(g.n, g.edges, [list(c) for c in col.classes])
    return record(4, "equitable colouring", ok == 1000, f"{ok}/1000 proper with class sizes within 1")


# 5 -------------------------------------------------------------------------

def criterion_5():
    rng = random.Random(5)
    same = clean = covered = 0
    for i in range(500):
        k = rng.randint(2, 7)
        base = rng.randint(1, 30)
        sizes = [base - rng.randint(0, base // k) for _ in range(k)]
        rng.shuffle(sizes)
        res = residues(sizes)
        same += len(set(res)) == 1 and all(isinstance(r, int) for r in res)
        # dense cylinder of one colour over exactly these parts
        color = RED if i % 2 else BLUE
        n = sum(sizes)
        g = ColoredCompleteGraph.monochromatic(n, color)
        parts, off = [], 0
        for s in sizes:
            parts.append(tuple(range(off, off + s)))
            off += s
        # k = 2 admits only edgeless members (chi <= 1)
        fam = edgeless_family() if k == 2 else builtin("paths") if k == 3 else builtin("cycles")
        pieces = cover_cylinder(Cylinder(tuple(parts), color), fam, g, seed=i)
        cert = PartitionCertificate(n, [CertPiece(color, fam.name, p.mapping) for p in pieces])
        covered += 1
        clean += len(pieces) <= k + 1 and verify_certificate(g, fam, fam, cert).ok
    passed = same == 500 and clean == covered
    return record(5, "balancing identity and cylinder cover", passed,
                  f"identity exact on {same}/500, cover clean with <= k+1 pieces on {clean}/{covered}")


# 6 -------------------------------------------------------------------------

def random_pair(rng, a, b, p):
    edges = [(i, a + j) for i in range(a) for j in range(b) if rng.random() < p]
    return VertexPair(range(a), range(a, a + b), Graph(a + b, edges))


def beta_slices(side, beta):
    """All subsets of ``side`` with at least ``beta * len(side)`` vertices."""
    low = math.ceil(beta * len(side))
    return [c for m in range(low, len(side) + 1) for c in itertools.combinations(side, m)]


SLICE_CAP = 2000


def criterion_6():
    rng = random.Random(6)
    pairs = []
    while len(pairs) < 100:
        eps = Fraction(rng.choice((35, 40, 45)), 100)
        a, b = rng.randint(3, 12), rng.randint(3, 12)
        pair = random_pair(rng, a, b, rng.choice((0.5, 0.7, 0.9, 1.0)))
        if pair.edge_count() and check_super_regular(pair, eps, Fraction(1, 4), Fraction(1, 5)).ok:
            assert check_regularity_exact(pair, eps).checked_exactly
            pairs.append((pair, eps))
    slices = good = exhaustive = 0
    for pair, eps in pairs:
        d = density(pair)
        beta = eps + (1 - eps) * Fraction(rng.randint(1, 9), 10)
        eps_prime = max(eps / beta, 2 * eps)
        xs, ys = beta_slices(pair.a, beta), beta_slices(pair.b, beta)
        if len(xs) * len(ys) <= SLICE_CAP:
            chosen = list(itertools.product(xs, ys))
            exhaustive += 1
        else:
            chosen = [(rng.choice(xs), rng.choice(ys)) for _ in range(SLICE_CAP)]
        for sa, sb in chosen:
            sub = pair.restrict(sa, sb)
            slices += 1
            reg = check_regularity_exact(sub, eps_prime).verdict is Verdict.REGULAR
            good += reg and abs(density(sub) - d) < eps
    return record(6, "slicing on super-regular pairs", good == slices,
                  f"{good}/{slices} slices pass at eps' with density within eps "
                  f"(all slices enumerated for {exhaustive}/100 pairs, {SLICE_CAP} sampled for the rest)")


# 7 -------------------------------------------------------------------------

def criterion_7():
    checks = fails = 0
    for D in (2, 3, 4):
        fam = lower_bound_family(D)
        members = [fam.member(n) for n in range(1, 65)]
        for n, g in enumerate(members, start=1):
            checks += 1
            fails += not (g.n == n and g.max_degree <= D and g.is_bipartite)
        for i, j in itertools.combinations(range(64), 2):
            checks += 1
            small, big = members[i], members[j]
            fails += not all(big.has_edge(u, v) for u, v in small.edges)
    return record(7, "lower-bound family structure", fails == 0, f"{checks - fails}/{checks} checks hold for Delta in 2..4, n <= 64")


# 8 -------------------------------------------------------------------------

def criterion_8():
    notes = []
    ok = True
    for eps in (Fraction(1, 10), Fraction(3, 10)):
        for a, b in ((1, 1), (4, 7), (12, 12)):
            g = Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])
            ok &= check_regularity_exact(VertexPair(range(a), range(a, a + b), g), eps).verdict is Verdict.REGULAR
    notes.append("complete pairs regular" if ok else "complete pair rejected")
    m = 8
    pair = VertexPair(range(m), range(m, 2 * m), Graph(2 * m, [(i, m + i) for i in range(m)]))
    res = check_regularity_exact(pair, Fraction(1, 5))
    witness_ok = False
    if res.verdict is Verdict.IRREGULAR:
        xs, ys = res.witness
        e = sum(1 for x in xs for y in ys if y == x + m)
        dev = abs(Fraction(e, len(xs) * len(ys)) - Fraction(m, m * m))
        witness_ok = len(xs) * 5 > m and len(ys) * 5 > m and dev >= Fraction(1, 5)
    ok &= witness_ok
    notes.append("matching witness re-derived" if witness_ok else "matching witness invalid")
    rng = random.Random(8)
    slowest = 0.0
    for backend in available_backends():
        for p in (0.5, 0.9):
            big = random_pair(rng, 12, 12, p)
            t = time.perf_counter()
            check_regularity_exact(big, Fraction(9, 20), backend=backend)
            slowest = max(slowest, time.perf_counter() - t)
    ok &= slowest < 120
    notes.append(f"slowest 12+12 exact check {slowest:.3f}s (< 120s)")
    return record(8, "regularity kernel", ok, ", ".join(notes))


# 9 -------------------------------------------------------------------------

def criterion_9():
    K3 = complete_graph(3)
    found = exists = 0
    for seed in range(200):
        g = random_coloring(6, 0.5, seed)
        hit = find_mono_copy(g, range(6), K3, K3)
        if hit is not None:
            color, emb = hit
            found += not embedding_problems(emb, g) and emb.color is color
        col = naive.color_fn(g)
        exists += any(col(a, b) == col(b, c) == col(a, c) for a, b, c in itertools.combinations(range(6), 3))
    return record(9, "monochromatic triangle extraction", found == 200 and exists == 200,
                  f"{found}/200 verified triangles, exhaustive search confirms {exists}/200")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 10)])
def test_acceptance(criterion):
    num = CRITERIA.index(criterion) + 1
    criterion()
    ok, title, detail = RESULTS[num]
    assert ok, f"{title}: {detail}"


if __name__ == "__main__":
    for crit in CRITERIA:
        crit()
    print("\n".join(summary_lines()))
    sys.exit(0 if all(ok for ok, _, _ in RESULTS.values()) else 1)
