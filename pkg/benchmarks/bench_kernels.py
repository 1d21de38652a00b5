"""Time the compiled kernels against their pure-Python twins.

    python3 benchmarks/bench_kernels.py [--repeat N]

Both backends are run on the same inputs and their results compared.
"""

import argparse
import random
import time

from monopart import kernels
from monopart.embedding import embed_pattern
from monopart.families import cycle_power_graph
from monopart.generate import random_coloring
from monopart.graph import RED, cycle_graph
from monopart.regularity import VertexPair


def embedding_case(n, p, pattern, seed):
    g = random_coloring(n, p, seed)
    dom = (1 << n) - 1
    return lambda backend: embed_pattern(pattern, [dom] * pattern.n, g.adj(RED), range(n), 20000, backend)


def regularity_case(size, p, seed, eps=(9, 20)):
    rng = random.Random(seed)
    g = random_coloring(2 * size, p, seed)
    verts = list(range(2 * size))
    rng.shuffle(verts)
    pair = VertexPair(sorted(verts[:size]), sorted(verts[size:]), g, RED)
    cols = pair.right_columns()
    return lambda backend: kernels.regularity_scan(cols, size, size, eps[0], eps[1], backend)


CASES = [
    ("embed C_30 in G(60,0.5)", embedding_case(60, 0.5, cycle_graph(30), 1)),
    ("embed C_40^2 in G(80,0.7)", embedding_case(80, 0.7, cycle_power_graph(40, 2), 2)),
    ("regularity 10+10 p=0.5, no witness", regularity_case(10, 0.5, 3)),
    ("regularity 12+12 p=0.5, witness at eps=1/5", regularity_case(12, 0.5, 4, (1, 5))),
    ("regularity 12+12 p=0.5, no witness", regularity_case(12, 0.5, 4)),
]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = kernels.available_backends()
    print("case\t" + "\t".join(f"{b}_ms" for b in backends) + "\tspeedup\tsame")
    for name, run in CASES:
        times, results = {}, {}
        for b in backends:
            best = float("inf")
            for _ in range(args.repeat):
                t = time.perf_counter()
                results[b] = run(b)
                best = min(best, time.perf_counter() - t)
            times[b] = best * 1000
        same = len({repr(r) for r in results.values()}) == 1
        speed = times["python"] / times["cython"] if "cython" in times and times["cython"] > 0 else float("nan")
        print(name + "\t" + "\t".join(f"{times[b]:.2f}" for b in backends) + f"\t{speed:.1f}x\t{same}")


if __name__ == "__main__":
    main()
