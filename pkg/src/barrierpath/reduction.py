"""Gadget graph encoding a Subset Sum instance as Minimum Installation Path.

Between ``u[i-1]`` and ``u[i]`` sit two length-two paths: the upper choice
with weights (L+2a_i, L+2a_i) and the lower choice with (L+a_i, L+3a_i).  A
final edge ``u[n] t`` has weight 2b.  Taking the lower choice costs a_i more
but carries 2a_i more power forward, so the instance is a yes-instance
exactly when the optimum is at most ``C = nL + 2*sum(a) + b``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from . import subset_sum
from .graph import Edge, WeightedGraph
from .greedy import PathProfile, extend
from .solve import SolveResult, solve_exact_integer
from .subset_sum import SubsetSumInstance


@dataclass(frozen=True)
class MipReduction:
    instance: SubsetSumInstance
    graph: WeightedGraph
    L: int
    C: int

    @property
    def n(self) -> int:
        return self.instance.n

    def hub(self, i: int) -> str:
        """Name of u_i (u_0 is the source)."""
        return "s" if i == 0 else "u%d" % i


def choice_weights(L: int, ai: int) -> tuple:
    """Edge weights of the (upper, lower) choice paths, in travel order."""
    return (L + 2 * ai, L + 2 * ai), (L + ai, L + 3 * ai)


def build(inst: SubsetSumInstance) -> MipReduction:
    n = inst.n
    L = 2 * sum(inst.a) + 2
    C = n * L + 2 * sum(inst.a) + inst.b
    vertices = ["s"] + ["u%d" % i for i in range(1, n + 1)] + ["t"]
    edges = []
    for i, ai in enumerate(inst.a, start=1):
        prev, here = ("s" if i == 1 else "u%d" % (i - 1)), "u%d" % i
        upper, lower = choice_weights(L, ai)
        up, lo = "up_%d" % i, "lo_%d" % i
        vertices += [up, lo]
        edges += [
            Edge(prev, up, upper[0]),
            Edge(up, here, upper[1]),
            Edge(prev, lo, lower[0]),
            Edge(lo, here, lower[1]),
        ]
    edges.append(Edge("u%d" % n, "t", 2 * inst.b))
    g = WeightedGraph(tuple(vertices), tuple(edges), "s", "t")
    return MipReduction(inst, g, L, C)


def enumerate_profiles(red: MipReduction, i: int) -> set:
    """All (opt, phi) pairs over s -> u_i paths, by folding the choice gadgets."""
    if not 0 <= i <= red.n:
        raise ValueError("i must lie in 0..n")
    profiles = {PathProfile()}
    for ai in red.instance.a[:i]:
        nxt = set()
        for prof in profiles:
            for choice in choice_weights(red.L, ai):
                p = prof
                for w in choice:
                    p = extend(p, w)
                nxt.add(p)
        profiles = nxt
    return {(p.opt, p.phi) for p in profiles}


def predicted_profiles(red: MipReduction, i: int) -> set:
    """Closed form: one pair per subset I of the first i indices."""
    a = red.instance.a[:i]
    base = i * red.L + 2 * sum(a)
    out = set()
    for picks in product((0, 1), repeat=i):
        s = sum(x for x, p in zip(a, picks) if p)
        out.add((base + s, 2 * s))
    return out


@dataclass(frozen=True)
class ReductionCheck:
    instance: SubsetSumInstance
    witness: tuple
    solution: SolveResult
    C: int

    @property
    def yes(self) -> bool:
        return bool(self.witness)

    @property
    def feasible(self) -> bool:
        return self.solution.cost <= self.C

    @property
    def passed(self) -> bool:
        return self.yes == self.feasible

    def __bool__(self):
        return self.passed


def check_reduction(inst: SubsetSumInstance, backend: str | None = None) -> ReductionCheck:
    red = build(inst)
    return ReductionCheck(inst, subset_sum.solve(inst), solve_exact_integer(red.graph, backend=backend), red.C)


def verify_reduction(inst: SubsetSumInstance) -> bool:
    """Subset Sum answer agrees with ``OPT <= C`` on the gadget graph."""
    return check_reduction(inst).passed
