"""Compare the compiled and pure-Python search kernels.

    python3 benchmarks/bench_kernels.py [--vertices 200] [--weight 200] [--repeat 3]

Times ``solve_exact_integer`` (residual states) and ``fptas`` (domain
states) on random connected graphs and checks both backends return the
same witness.
"""
import argparse
import random
import time
from fractions import Fraction

from barrierpath import kernels
from barrierpath.graph import WeightedGraph
from barrierpath.solve import fptas, solve_exact_integer


def random_graph(rng, n, w_max, degree=4):
    verts = ["v%d" % i for i in range(n)]
    edges = [(verts[rng.randrange(i)], verts[i], rng.randint(1, w_max)) for i in range(1, n)]
    for _ in range(n * (degree - 2) // 2):
        u, v = rng.sample(verts, 2)
        edges.append((u, v, rng.randint(1, w_max)))
    return WeightedGraph.build(edges, verts[0], verts[-1], verts)


def best_of(fn, repeat):
    best, out = None, None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--vertices", type=int, default=200)
    ap.add_argument("--weight", type=int, default=200)
    ap.add_argument("--eps", type=Fraction, default=Fraction(1, 2))
    ap.add_argument("--graphs", type=int, default=3)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)

    if kernels.BACKEND != "cython":
        print("compiled kernels unavailable; only the Python backend can run")
        return 1
    rng = random.Random(args.seed)
    graphs = [random_graph(rng, args.vertices, args.weight) for _ in range(args.graphs)]
    jobs = [
        ("exact", lambda g, b: solve_exact_integer(g, backend=b)),
        ("fptas", lambda g, b: fptas(g, args.eps, backend=b)),
    ]
    print("%-6s %6s %10s %10s %8s" % ("solver", "graph", "python s", "cython s", "speedup"))
    for name, job in jobs:
        for k, g in enumerate(graphs):
            tp, rp = best_of(lambda: job(g, "python"), args.repeat)
            tc, rc = best_of(lambda: job(g, "cython"), args.repeat)
            if (rp.cost, rp.path) != (rc.cost, rc.path):
                raise SystemExit("backends disagree on %s graph %d" % (name, k))
            print("%-6s %6d %10.4f %10.4f %7.1fx" % (name, k, tp, tc, tp / tc))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
