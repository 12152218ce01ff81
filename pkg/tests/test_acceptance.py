"""Acceptance criteria, one test each.

Every test prints a single PASS/FAIL line with its measurements; the lines
are also repeated in the pytest terminal summary.  Run directly with
``python3 tests/test_acceptance.py`` to get just those lines.
"""
import random
import sys
import time
from fractions import Fraction
from itertools import product
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from conftest import ACCEPTANCE_LINES  # noqa: E402
from oracles import grid_min_path, random_connected  # noqa: E402

from barrierpath import kernels  # noqa: E402
from barrierpath.bridge import build_gprime, check_mbs_reduction  # noqa: E402
from barrierpath.graph import Path as GPath, WeightedGraph, activates_path  # noqa: E402
from barrierpath.greedy import greedy_assign, profile  # noqa: E402
from barrierpath.mbs import build as build_mbs, validation_checks  # noqa: E402
from barrierpath.reduction import build as build_gadget, check_reduction  # noqa: E402
from barrierpath.solve import fptas, solve_bruteforce, solve_exact_integer  # noqa: E402
from barrierpath.subset_sum import SubsetSumInstance  # noqa: E402

SEED = 20240601


def report(number, title, ok, elapsed, limit, detail=""):
    ok = ok and elapsed < limit
    line = "%s  criterion %d  %-34s %7.2fs (limit %gs)  %s" % (
        "PASS" if ok else "FAIL", number, title, elapsed, limit, detail)
    print(line)
    ACCEPTANCE_LINES.append(line)
    return ok


def graph_corpus(count):
    rng = random.Random(SEED)
    out = []
    for _ in range(count):
        verts, edges, s, t = random_connected(rng, n_max=8, w_max=20)
        out.append(WeightedGraph.build(edges, s, t, verts))
    return out


def test_criterion_1_fig3():
    inst = SubsetSumInstance((2, 3, 3, 2), 7)
    t0 = time.perf_counter()
    red = build_gadget(inst)
    res = solve_exact_integer(red.graph)
    elapsed = time.perf_counter() - t0
    hub = red.hub(red.n)
    prefix = GPath.along(red.graph, res.path.vertices[: res.path.vertices.index(hub) + 1])
    phi = profile(prefix, red.graph).phi
    ok = red.L == 22 and res.cost == 115 and phi == 14 == 2 * inst.b
    ok = ok and all(solve_exact_integer(red.graph, backend=b).cost == 115 for b in ("python", kernels.BACKEND))
    assert report(1, "worked example OPT=115, phi=14", ok, elapsed, 1.0,
                  "opt=%s phi=%s path=%s" % (res.cost, phi, "-".join(res.path.vertices)))


def test_criterion_2_greedy_optimality():
    rng = random.Random(SEED + 2)
    t0 = time.perf_counter()
    bad = 0
    for _ in range(1000):
        ws = [rng.randint(1, 20) for _ in range(rng.randint(1, 6))]
        verts = ["v%d" % i for i in range(len(ws) + 1)]
        g = WeightedGraph.build(list(zip(verts, verts[1:], ws)), verts[0], verts[-1])
        if greedy_assign(GPath.along(g, verts), g).cost != grid_min_path(ws, top=20):
            bad += 1
    elapsed = time.perf_counter() - t0
    assert report(2, "greedy = integer-grid minimum", bad == 0, elapsed, 30.0, "mismatches=%d/1000" % bad)


def test_criterion_3_oracle_equivalence():
    corpus = graph_corpus(500)
    t0 = time.perf_counter()
    bad = 0
    for g in corpus:
        brute = solve_bruteforce(g).cost
        if solve_exact_integer(g).cost != brute or solve_exact_integer(g, backend="python").cost != brute:
            bad += 1
    elapsed = time.perf_counter() - t0
    assert report(3, "exact solver = brute force", bad == 0, elapsed, 60.0,
                  "mismatches=%d/500 backend=%s" % (bad, kernels.BACKEND))


def test_criterion_4_fptas_bound():
    corpus = graph_corpus(500)
    t0 = time.perf_counter()
    bad = 0
    worst = Fraction(1)
    for g in corpus:
        opt = solve_exact_integer(g).cost
        for eps in (Fraction(1), Fraction(1, 2), Fraction(1, 10)):
            res = fptas(g, eps)
            if res.cost > (1 + eps) * opt or not activates_path(g, res.path, res.assignment):
                bad += 1
            worst = max(worst, Fraction(res.cost) / opt)
    elapsed = time.perf_counter() - t0
    assert report(4, "fptas <= (1+eps) OPT", bad == 0, elapsed, 300.0,
                  "violations=%d/1500 worst_ratio=%.4f" % (bad, float(worst)))


def test_criterion_5_mip_sweep():
    t0 = time.perf_counter()
    count = bad = 0
    for n in range(1, 6):
        for a in product(range(1, 5), repeat=n):
            for b in range(1, sum(a) + 2):
                check = check_reduction(SubsetSumInstance(a, b))
                opt, C = check.solution.cost, check.C
                robust = (opt <= C) == (opt <= C + Fraction(1, 3)) == (opt <= C + Fraction(2, 3))
                count += 1
                bad += not (check.passed and robust)
    elapsed = time.perf_counter() - t0
    assert report(5, "gadget reduction sweep n<=5", bad == 0, elapsed, 300.0,
                  "instances=%d failures=%d" % (count, bad))


def mbs_instances(b_top_extra):
    for n in range(1, 4):
        for a in product(range(1, 4), repeat=n):
            for b in range(1, sum(a) + 1 + b_top_extra):
                yield SubsetSumInstance(a, b)


def test_criterion_6_mbs_validation():
    t0 = time.perf_counter()
    count = bad = 0
    first = ""
    for inst in mbs_instances(1):
        rep = validation_checks(build_mbs(inst))
        count += 1
        if not rep.passed:
            bad += 1
            first = first or "%s: %s" % (inst, rep.first_failure().name)
    elapsed = time.perf_counter() - t0
    assert report(6, "disk construction validates", bad == 0, elapsed, 60.0,
                  "instances=%d failures=%d %s" % (count, bad, first))


def test_criterion_7_mbs_end_to_end():
    t0 = time.perf_counter()
    count = bad = routes = barriers = 0
    worst = Fraction(0)
    for inst in mbs_instances(0):
        check = check_mbs_reduction(inst)
        count += 1
        routes += check.route_ok
        barriers += check.barrier_ok
        worst = max(worst, check.edge_drift)
        bad += not (check.passed and check.edge_drift <= 2)
    elapsed = time.perf_counter() - t0
    assert report(7, "disk reduction end to end", bad == 0, elapsed, 600.0,
                  "instances=%d failures=%d routes=%d barriers=%d max_drift=%.3f"
                  % (count, bad, routes, barriers, float(worst)))


def test_criterion_8_scale_invariance():
    t0 = time.perf_counter()
    bad = 0
    for g in graph_corpus(150):
        opt = solve_exact_integer(g).cost
        for sigma in (2, 3, 7):
            bad += solve_exact_integer(g.scaled(sigma)).cost != sigma * opt
    mbs_count = 0
    for n in range(1, 3):
        for a in product(range(1, 3), repeat=n):
            for b in range(1, sum(a) + 1):
                inst = SubsetSumInstance(a, b)
                base = build_mbs(inst)
                ref = check_mbs_reduction(inst, base)
                for sigma in (2, 5):
                    big = base.scaled(sigma)
                    check = check_mbs_reduction(inst, big)
                    weights_scale = all(
                        e2.w == sigma * e1.w or abs(e2.w - sigma * e1.w) <= Fraction(sigma, 2 ** 40)
                        for e1, e2 in zip(build_gprime(base).edges, build_gprime(big).edges)
                    )
                    same = (check.feasible, check.yes, check.route_ok, check.barrier_ok, check.passed) == (
                        ref.feasible, ref.yes, ref.route_ok, ref.barrier_ok, ref.passed)
                    bad += not (same and weights_scale and check.passed)
                    mbs_count += 1
    elapsed = time.perf_counter() - t0
    assert report(8, "integer scaling preserves verdicts", bad == 0, elapsed, 60.0,
                  "graph_cases=450 disk_cases=%d failures=%d" % (mbs_count, bad))


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
