"""Command line: ``monopart gen|partition|verify|oracle|bench``.

Exit codes: 0 success or accepted certificate, 1 rejected certificate,
2 usage or input error, 3 piece budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys

from monopart import io
from monopart.bench import SUITES, run_suite
from monopart.certificate import verify_certificate
from monopart.errors import BudgetError, MonopartError
from monopart.families import family_from_spec
from monopart.generate import MODES, adversarial_search, bipartite_split, random_coloring
from monopart.oracle import min_partition_exact
from monopart.params import PipelineParams, theoretical_values
from monopart.pipeline import partition, partition_bipartite

EXIT_OK, EXIT_REJECT, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def _parser():
    ap = argparse.ArgumentParser(prog="monopart", description="Monochromatic partitions of 2-coloured complete graphs.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", help="generate a colouring")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--mode", choices=MODES, default="random")
    g.add_argument("--p", type=float, default=0.5, help="red probability (random mode)")
    g.add_argument("--s", type=int, default=None, help="first class size (bipartite_split, default n//2)")
    g.add_argument("--pattern", default="cycles", help="pattern family for adversarial mode")
    g.add_argument("--pattern-n", type=int, default=4, help="pattern size for adversarial mode")
    g.add_argument("--budget", type=int, default=2000, help="local search steps (adversarial mode)")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", default="-")

    p = sub.add_parser("partition", help="partition a colouring into family copies")
    p.add_argument("--coloring", required=True)
    p.add_argument("--family1", required=True, help="red family")
    p.add_argument("--family2", help="blue family (defaults to family1)")
    p.add_argument("--bipartite", action="store_true", help="one bipartite family in both colours, three-part cylinders")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=4096, help="maximum number of pieces")
    p.add_argument("--time-limit", type=float, default=50.0, help="seconds before searches give up")
    p.add_argument("--cert-out", default="-")
    p.add_argument("--theoretical", action="store_true",
                   help="also print the asymptotic parameter formulas (never used for execution)")

    v = sub.add_parser("verify", help="check a certificate")
    v.add_argument("--coloring", required=True)
    v.add_argument("--family1", required=True)
    v.add_argument("--family2")
    v.add_argument("--cert", required=True)

    o = sub.add_parser("oracle", help="exact minimum for a small colouring")
    o.add_argument("--coloring", required=True)
    o.add_argument("--family1", required=True)
    o.add_argument("--family2")
    o.add_argument("--cert-out", default=None)

    b = sub.add_parser("bench", help="run a benchmark suite")
    b.add_argument("--suite", choices=sorted(SUITES), default="quick")
    b.add_argument("--seed", type=int, default=0)
    return ap


def _write(path, text):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _families(args):
    f1 = family_from_spec(args.family1)
    f2 = f1 if not args.family2 or args.family2 == args.family1 else family_from_spec(args.family2)
    return f1, f2


def _gen(args):
    if args.mode == "random":
        g = random_coloring(args.n, args.p, args.seed)
    elif args.mode == "bipartite_split":
        g = bipartite_split(args.n, args.n // 2 if args.s is None else args.s)
    else:
        F = family_from_spec(args.pattern).member(args.pattern_n)
        g, residual = adversarial_search(args.n, F, args.budget, args.seed)
        print(f"residual monochromatic copies: {residual}", file=sys.stderr)
    _write(args.out, io.format_coloring(g))
    return EXIT_OK


def _print_theoretical(f1, f2, bipartite):
    D = max(f1.max_degree, f2.max_degree)
    vals = theoretical_values(D)
    print(f"# asymptotic parameters for Delta={vals['Delta']} (documentation only)", file=sys.stderr)
    for key, formula in vals["formulas"].items():
        print(f"#   {key}: {formula}", file=sys.stderr)
    print(f"#   log2(epsilon) = {vals['log2_epsilon']}, log2(eta) = {vals['log2_eta']:.4g}", file=sys.stderr)
    print(f"#   cylinder search needs n >= {vals['min_n_for_cylinder']}", file=sys.stderr)
    if bipartite:
        print("#   bipartite mode uses k = 3", file=sys.stderr)


def _partition(args):
    g = io.read_coloring(args.coloring)
    f1, f2 = _families(args)
    if args.theoretical:
        _print_theoretical(f1, f2, args.bipartite)
    params = PipelineParams(seed=args.seed, piece_budget=args.budget, search_time_limit=args.time_limit)
    try:
        if args.bipartite:
            cert = partition_bipartite(g, f1, params)
        else:
            cert = partition(g, f1, f2, params)
    except BudgetError as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        if exc.partial is not None and args.cert_out != "-":
            _write(args.cert_out + ".partial", io.format_certificate(exc.partial))
        return EXIT_BUDGET
    _write(args.cert_out, io.format_certificate(cert))
    print(f"pieces: {len(cert.pieces)}", file=sys.stderr)
    print(f"stages: {json.dumps(cert.notes.get('events', {}), sort_keys=True)}", file=sys.stderr)
    return EXIT_OK


def _verify(args):
    g = io.read_coloring(args.coloring)
    f1, f2 = _families(args)
    cert = io.read_certificate(args.cert)
    verdict = verify_certificate(g, f1, f2, cert)
    if verdict.ok:
        print(f"accept: {len(cert.pieces)} pieces cover {g.n} vertices")
        return EXIT_OK
    print(f"reject: {len(verdict.violations)} violation(s)")
    for v in verdict.violations:
        print(f"  {v}")
    return EXIT_REJECT


def _oracle(args):
    g = io.read_coloring(args.coloring)
    f1, f2 = _families(args)
    count, cert = min_partition_exact(g, f1, f2)
    print(count)
    if args.cert_out:
        _write(args.cert_out, io.format_certificate(cert))
    return EXIT_OK


def _bench(args):
    for row in run_suite(args.suite, args.seed):
        print(row.line(), flush=True)
    return EXIT_OK


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    handler = {"gen": _gen, "partition": _partition, "verify": _verify, "oracle": _oracle, "bench": _bench}[args.cmd]
    try:
        return handler(args)
    except (MonopartError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
