"""Command-line interface.

Exit status: 0 on success or PASS, 1 on FAIL, 2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import product

from . import bridge, mbs, reduction, solve, subset_sum, textio
from .graph import as_rational
from .render import to_svg


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError("cannot read %s: %s" % (path, exc.strerror)) from None


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _rational(tok: str):
    try:
        v = as_rational(Fraction(tok))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("not a number: %r" % tok) from None
    return v


def _approx(v) -> str:
    return "%.6f" % float(v)


def cmd_solve(args) -> int:
    g, _ = textio.parse_graph(_read(args.graph))
    if args.method == "exact":
        sol = solve.solve_exact_integer(g, backend=args.backend)
    elif args.method == "brute":
        sol = solve.solve_bruteforce(g)
    else:
        sol = solve.fptas(g, args.eps, backend=args.backend)
    _write(args.output, textio.dump_solution(sol))
    return 0


def cmd_lambda(args) -> int:
    g, _ = textio.parse_graph(_read(args.graph))
    print(textio.fmt(solve.compute_lambda(g)))
    return 0


def cmd_ss(args) -> int:
    inst = textio.parse_subset_sum(_read(args.instance))
    found = subset_sum.solve(inst)
    print("no" if not found else "yes " + " ".join(map(str, found)))
    return 0


def cmd_reduce(args) -> int:
    inst = textio.parse_subset_sum(_read(args.instance))
    if args.kind == "mip":
        red = reduction.build(inst)
        _write(args.output, textio.dump_graph(red.graph, budget=red.C))
    else:
        _write(args.output, textio.dump_mbs(mbs.build(inst)))
    return 0


def _mip_line(check) -> str:
    return "%s opt=%s C=%d %s" % (
        "PASS" if check.passed else "FAIL", textio.fmt(check.solution.cost), check.C, "yes" if check.yes else "no")


def _mbs_line(check) -> str:
    cert = "route" if check.route_ok else "barrier" if check.barrier_ok else "none"
    return "%s opt=%s budget=%s C=%s %s cert=%s edge_drift=%s route_drift=%s" % (
        "PASS" if check.passed else "FAIL",
        _approx(check.solution.cost),
        textio.fmt(check.budget),
        textio.fmt(check.mbs.budget),
        "yes" if check.yes else "no",
        cert,
        _approx(check.edge_drift),
        _approx(check.route_drift),
    )


def cmd_verify(args) -> int:
    if args.kind == "cert":
        if args.solution is None or args.cert is None:
            raise UsageError("verify cert needs <mbs-file> <solution-file> <cert-file>")
        inst = textio.parse_mbs(_read(args.instance))
        s = textio.parse_shrinks(_read(args.solution))
        cert = textio.parse_certificate(_read(args.cert))
        if isinstance(cert, bridge.RouteCertificate):
            budget = inst.slack_budget if args.budget is None else args.budget
            ok = bridge.check_route(inst, s, cert, budget)
            print("%s route cost=%s budget=%s" % ("PASS" if ok else "FAIL", textio.fmt(s.cost), textio.fmt(budget)))
        else:
            ok = bridge.check_barrier(inst, s, cert)
            print("%s barrier cost=%s disks=%d" % ("PASS" if ok else "FAIL", textio.fmt(s.cost), len(cert.disks)))
        return 0 if ok else 1
    if args.solution is not None or args.cert is not None:
        raise UsageError("extra positional arguments for verify %s" % args.kind)
    inst = textio.parse_subset_sum(_read(args.instance))
    if args.kind == "mip":
        check = reduction.check_reduction(inst)
        print(_mip_line(check))
        return 0 if check.passed else 1
    check = bridge.check_mbs_reduction(inst)
    print(_mbs_line(check))
    if args.shrinks_out and check.shrinks is not None:
        _write(args.shrinks_out, textio.dump_shrinks(check.shrinks))
    if args.cert_out:
        cert = check.route if check.yes else check.barrier
        if cert is not None:
            _write(args.cert_out, textio.dump_certificate(cert))
    return 0 if check.passed else 1


def cmd_render(args) -> int:
    inst = textio.parse_mbs(_read(args.instance))
    _write(args.output, to_svg(inst, width=args.width, annotate=args.annotate))
    return 0


def sweep_instances(kind: str, n_max: int, a_max: int):
    for n in range(1, n_max + 1):
        for a in product(range(1, a_max + 1), repeat=n):
            top = sum(a) + 1 if kind == "mip" else sum(a)
            for b in range(1, top + 1):
                yield subset_sum.SubsetSumInstance(a, b)


def _sweep_one(job):
    kind, a, b = job
    inst = subset_sum.SubsetSumInstance(a, b)
    if kind == "mip":
        check = reduction.check_reduction(inst)
    else:
        check = bridge.check_mbs_reduction(inst)
    return inst.n, check.yes, check.passed


def cmd_sweep(args) -> int:
    if args.n_max < 1 or args.a_max < 1:
        raise UsageError("--n-max and --a-max must be positive")
    jobs = [(args.kind, i.a, i.b) for i in sweep_instances(args.kind, args.n_max, args.a_max)]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_sweep_one, jobs, chunksize=16))
    else:
        results = [_sweep_one(j) for j in jobs]
    rows = {}
    for n, yes, ok in results:
        r = rows.setdefault(n, [0, 0, 0, 0])
        r[0] += 1
        r[1 if yes else 2] += 1
        r[3] += not ok
    print("%3s %9s %7s %7s %6s" % ("n", "instances", "yes", "no", "fail"))
    for n in sorted(rows):
        r = rows[n]
        print("%3d %9d %7d %7d %6d" % (n, r[0], r[1], r[2], r[3]))
    failed = sum(r[3] for r in rows.values())
    print("%s %d/%d" % ("PASS" if not failed else "FAIL", len(results) - failed, len(results)))
    return 0 if not failed else 1


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="barrierpath", description="Installation paths and barrier shrinkage.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="solve a graph file")
    s.add_argument("method", choices=["exact", "brute", "fptas"])
    s.add_argument("graph")
    s.add_argument("--eps", type=_rational, default=Fraction(1, 2))
    s.add_argument("--backend", choices=["cython", "python"], default=None)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("lambda", help="smallest uniform power joining the terminals")
    s.add_argument("graph")
    s.set_defaults(func=cmd_lambda)

    s = sub.add_parser("ss", help="subset sum")
    s.add_argument("action", choices=["solve"])
    s.add_argument("instance")
    s.set_defaults(func=cmd_ss)

    s = sub.add_parser("reduce", help="build a graph or disk instance from subset sum")
    s.add_argument("kind", choices=["mip", "mbs"])
    s.add_argument("instance")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("verify", help="check a reduction end to end, or a certificate")
    s.add_argument("kind", choices=["mip", "mbs", "cert"])
    s.add_argument("instance")
    s.add_argument("solution", nargs="?")
    s.add_argument("cert", nargs="?")
    s.add_argument("--budget", type=_rational, default=None)
    s.add_argument("--shrinks-out")
    s.add_argument("--cert-out")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("render", help="draw a disk instance as SVG")
    s.add_argument("instance")
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--width", type=int, default=1200)
    s.add_argument("--annotate", action="store_true", help="label gap depths")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("sweep", help="exhaustive reduction check over small instances")
    s.add_argument("kind", choices=["mip", "mbs"])
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--a-max", type=int, required=True)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_sweep)
    return p


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, textio.FormatError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (solve.NoPath, solve.NoFeasiblePath) as exc:
        print("FAIL %s" % exc)
        return 1
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
