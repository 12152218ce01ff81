"""Solvers for Minimum Installation Path.

* :func:`solve_bruteforce` enumerates simple s-t paths; it is the oracle.
* :func:`solve_exact_integer` runs a shortest-path search over
  (vertex, residual power) states; pseudopolynomial in the largest weight.
* :func:`solve_discretized` restricts powers to a finite domain and searches
  over (vertex, power level) states; allows general activation coefficients.
* :func:`fptas` picks the domain from the uniform-power threshold lambda.

The state searches may return walks; repeated vertices are merged at their
largest power, which keeps every edge activated and never raises the cost.
"""
from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import kernels
from .graph import (
    GraphError,
    NonUnitCoefficients,
    Path,
    PowerAssignment,
    Rational,
    WeightedGraph,
    as_rational,
)
from .greedy import PathProfile, extend, greedy_assign


class NoPath(GraphError):
    pass


class NoFeasiblePath(GraphError):
    pass


class NonIntegerWeights(GraphError):
    pass


@dataclass(frozen=True)
class SolveResult:
    cost: Rational
    path: Path
    assignment: PowerAssignment


@dataclass(frozen=True)
class PowerDomain:
    values: tuple

    def __post_init__(self):
        vals = tuple(as_rational(v) for v in self.values)
        if not vals or vals[0] != 0:
            raise ValueError("a power domain must start at 0")
        if any(a >= b for a, b in zip(vals, vals[1:])):
            raise ValueError("power domain must be strictly increasing")
        object.__setattr__(self, "values", vals)

    @classmethod
    def grid(cls, step: Rational, count: int) -> "PowerDomain":
        """``{k * step : k = 0 .. count - 1}``."""
        step = as_rational(step)
        return cls(tuple(as_rational(step * k) for k in range(count)))

    def __len__(self):
        return len(self.values)


def _require_unit(g: WeightedGraph) -> None:
    if not g.unit:
        raise NonUnitCoefficients("this solver needs alpha = beta = 1 on every edge")


def _adjacency(g: WeightedGraph):
    """CSR over directed edge copies: (ptr, to, edge id, weight)."""
    ptr = [0]
    to, eid, w = [], [], []
    for v in g.vertices:
        for k in g.incident(v):
            e = g.edges[k]
            to.append(g.index(e.other(v)))
            eid.append(k)
            w.append(e.w)
        ptr.append(len(to))
    return ptr, to, eid, w


def _merge_walk(vertices, edges, levels):
    """Remove cycles from a walk, keeping the largest level seen per kept vertex."""
    pos = {}
    vs, es, ls = [], [], []
    for i, v in enumerate(vertices):
        if v in pos:
            cut = pos[v]
            for x in vs[cut + 1:]:
                del pos[x]
            top = max(ls[cut], levels[i])
            del vs[cut + 1:], ls[cut + 1:], es[cut:]
            ls[cut] = top
        else:
            if i:
                es.append(edges[i - 1])
            pos[v] = len(vs)
            vs.append(v)
            ls.append(levels[i])
    return vs, es, ls


def solve_bruteforce(g: WeightedGraph) -> SolveResult:
    """Cheapest path over all simple s-t paths, scored by greedy cost."""
    _require_unit(g)
    best = None
    stack = [(g.source, (g.source,), (), PathProfile())]
    while stack:
        v, verts, hops, prof = stack.pop()
        if v == g.sink:
            if best is None or prof.opt < best[0]:
                best = (prof.opt, verts, hops)
            continue
        for k in reversed(g.incident(v)):
            u = g.edges[k].other(v)
            if u not in verts:
                stack.append((u, verts + (u,), hops + (k,), extend(prof, g.edges[k].w)))
    if best is None:
        raise NoPath("source and sink are disconnected")
    path = Path(best[1], best[2])
    return SolveResult(best[0], path, greedy_assign(path, g))


def solve_exact_integer(g: WeightedGraph, backend: str | None = None) -> SolveResult:
    _require_unit(g)
    if not g.integral:
        raise NonIntegerWeights("solve_exact_integer needs integer weights")
    ptr, to, eid, w = _adjacency(g)
    W = int(g.max_weight)
    found = kernels.residual_search(
        g.n, ptr, to, w, eid, g.index(g.source), g.index(g.sink), W, backend=backend
    )
    if found is None:
        raise NoPath("source and sink are disconnected")
    cost, states, edges = found
    vs, es, _ = _merge_walk([v for v, _ in states], edges, [r for _, r in states])
    path = Path(tuple(g.vertices[v] for v in vs), tuple(es))
    assignment = greedy_assign(path, g)
    assert assignment.cost == cost, "merged walk changed the cost"
    return SolveResult(cost, path, assignment)


def _common_denominator(values) -> int:
    m = 1
    for x in values:
        if isinstance(x, Fraction):
            m = math.lcm(m, x.denominator)
    return m


def _threshold_table(levels: list, a: int, b: int, c: int) -> np.ndarray:
    """For each current level N_u: least index k with a*N_u + b*N_k >= c, or -1."""
    K = len(levels)
    bound = max(abs(c), abs(a) * levels[-1], b * levels[-1], 1)
    if bound < (1 << 61):
        lev = np.asarray(levels, dtype=np.int64)
        need = c - a * lev
        thr = -((-need) // b)
        idx = np.searchsorted(lev, thr, side="left").astype(np.int64)
        idx[idx >= K] = -1
        return idx
    out = np.empty(K, dtype=object)
    for i, nu in enumerate(levels):
        thr = -((a * nu - c) // b)
        k = bisect_left(levels, thr)
        out[i] = k if k < K else -1
    return out


def solve_discretized(g: WeightedGraph, d: PowerDomain, backend: str | None = None) -> SolveResult:
    """Cheapest assignment with every power drawn from ``d``."""
    M = _common_denominator(d.values)
    levels = [int(x * M) for x in d.values]
    ptr, to, eid, _ = _adjacency(g)
    rows = []
    tables = []
    for v in g.vertices:
        for k in g.incident(v):
            e = g.edges[k]
            den = _common_denominator([e.alpha, e.beta, e.w * M])
            a_here = int(e.coefficient(v) * den)
            a_there = int(e.coefficient(e.other(v)) * den)
            rows.append(len(tables))
            tables.append(_threshold_table(levels, a_here, a_there, int(e.w * M * den)))
    if tables and any(t.dtype == object for t in tables):
        table = np.array([list(t) for t in tables], dtype=object)
        backend = "python"
    else:
        table = np.stack(tables) if tables else np.zeros((0, len(levels)), dtype=np.int64)
    found = kernels.domain_search(
        g.n, ptr, to, eid, rows, levels, table, g.index(g.source), g.index(g.sink), backend=backend
    )
    if found is None:
        raise NoFeasiblePath("no s-t path can be activated with powers from this domain")
    cost, states, edges = found
    verts, hops, lev = [], [], []
    for i, (v, k) in enumerate(states):
        if i and edges[i - 1] == -1:
            lev[-1] = k
            continue
        if i:
            hops.append(edges[i - 1])
        verts.append(v)
        lev.append(k)
    vs, es, ls = _merge_walk(verts, hops, lev)
    path = Path(tuple(g.vertices[v] for v in vs), tuple(es))
    assignment = PowerAssignment({g.vertices[v]: d.values[k] for v, k in zip(vs, ls)})
    total = as_rational(Fraction(cost, M))
    assert assignment.cost == total, "merged walk changed the cost"
    return SolveResult(total, path, assignment)


def lambda_candidates(g: WeightedGraph) -> list:
    return sorted({as_rational(Fraction(e.w) / (e.alpha + e.beta)) for e in g.edges})


def compute_lambda(g: WeightedGraph) -> Rational:
    """Smallest uniform power whose activated edges join source and sink."""
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    by_value = sorted(
        (as_rational(Fraction(e.w) / (e.alpha + e.beta)), k) for k, e in enumerate(g.edges)
    )
    s, t = g.index(g.source), g.index(g.sink)
    i = 0
    while i < len(by_value):
        value = by_value[i][0]
        while i < len(by_value) and by_value[i][0] == value:
            e = g.edges[by_value[i][1]]
            parent[find(g.index(e.u))] = find(g.index(e.v))
            i += 1
        if find(s) == find(t):
            return value
    raise NoPath("source and sink are disconnected")


def fptas_domain(g: WeightedGraph, eps: Rational) -> PowerDomain:
    eps = as_rational(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    lam = compute_lambda(g)
    n = g.n
    count = math.ceil(Fraction(n * n) / eps) + 1
    return PowerDomain.grid(Fraction(eps * lam, n), count)


def fptas(g: WeightedGraph, eps: Rational, backend: str | None = None) -> SolveResult:
    """Assignment of cost at most ``(1 + eps) * OPT``."""
    return solve_discretized(g, fptas_domain(g, eps), backend=backend)
