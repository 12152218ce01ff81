"""Translation between barrier shrinkage on the constructed disks and
installation paths on the region graph G'.

G' has a node for every region a separating-free x-y curve can sit in
(``x``, ``alpha{i}``, ``beta{i}``, ``y{i}``, ``y``) and an edge for every
gap between two disks of depth below lambda.  The edge weight is the gap's
penetration depth, so opening the gap costs exactly that much shrinking
split between its two disks.  A power assignment on G' lifts to a shrink
vector of the same cost by giving each region's power to the disk that
region is named after.
"""
from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction

from . import subset_sum
from .geom import penetration_cmp, penetration_ceil
from .graph import (
    Edge,
    Path,
    PowerAssignment,
    Rational,
    WeightedGraph,
    activated_edges,
    activates_path,
    as_rational,
    is_feasible,
)
from .greedy import greedy_assign
from .mbs import MbsInstance, build, gap_targets, thick_pairs
from .solve import SolveResult, solve_bruteforce
from .subset_sum import SubsetSumInstance

WEIGHT_BITS = 40

# ray slopes tried, in order, when a parity ray grazes a polygon vertex
_SLOPES = [Fraction(p, q) for p, q in
           [(1, 7), (-3, 11), (5, 13), (-7, 17), (2, 19), (-9, 23), (11, 29), (-4, 31),
            (13, 37), (-15, 41), (6, 43), (-17, 47), (19, 53), (-8, 59), (21, 61), (-23, 67)]]


class StructureMismatch(ValueError):
    pass


class InfeasiblePower(ValueError):
    pass


class UnknownDiskId(KeyError):
    pass


class DegeneratePolygon(ValueError):
    pass


class ShrinkVector(Mapping):
    """Shrink per disk id; missing ids are not shrunk."""

    __slots__ = ("_d",)

    def __init__(self, shrinks: Mapping | dict = ()):
        items = shrinks.items() if isinstance(shrinks, Mapping) else shrinks
        clean = {}
        for k, v in items:
            v = as_rational(v)
            if v < 0:
                raise ValueError("negative shrink %s on %s" % (v, k))
            if v:
                clean[k] = clean.get(k, 0) + v
        self._d = clean

    def __getitem__(self, k) -> Rational:
        return self._d.get(k, 0)

    def __iter__(self):
        return iter(sorted(self._d))

    def __len__(self):
        return len(self._d)

    def __contains__(self, k):
        return k in self._d

    def __eq__(self, other):
        if isinstance(other, ShrinkVector):
            return self._d == other._d
        return NotImplemented

    def __repr__(self):
        return "ShrinkVector(%r)" % (dict(self.items()),)

    @property
    def cost(self) -> Rational:
        return sum(self._d.values(), 0)

    def check_against(self, inst: MbsInstance) -> None:
        for k, v in self._d.items():
            if k not in inst:
                raise UnknownDiskId(k)
            if v > inst.disk(k).radius:
                raise ValueError("shrink of %s exceeds its radius" % k)


@dataclass(frozen=True)
class RouteCertificate:
    """Ordered gaps an x-y curve passes through, as pairs of disk ids."""

    gaps: tuple

    def __post_init__(self):
        object.__setattr__(self, "gaps", tuple(tuple(g) for g in self.gaps))
        if any(len(g) != 2 for g in self.gaps):
            raise ValueError("every gap is a pair of disk ids")


@dataclass(frozen=True)
class BarrierCertificate:
    """Closed chain of disks whose center polygon separates x from y."""

    disks: tuple

    def __post_init__(self):
        object.__setattr__(self, "disks", tuple(self.disks))
        if len(self.disks) < 3:
            raise ValueError("a barrier needs at least three disks")


def _gap_nodes(n: int) -> dict:
    """Gap pair -> the two G' regions it joins, in x-to-y order."""
    hub = lambda i: "x" if i == 0 else "y%d" % i  # noqa: E731
    out = {}
    for i in range(1, n + 1):
        out[("D%d" % (i - 1), "A%d" % i)] = (hub(i - 1), "alpha%d" % i)
        out[("A%d" % i, "D%d" % i)] = ("alpha%d" % i, hub(i))
        out[("D%d" % (i - 1), "B%d" % i)] = (hub(i - 1), "beta%d" % i)
        out[("B%d" % i, "D%d" % i)] = ("beta%d" % i, hub(i))
    out[("D%d" % n, "A%d" % (n + 1))] = (hub(n), "y")
    out[("D%d" % n, "B%d" % (n + 1))] = (hub(n), "y")
    return out


def region_disk(inst: MbsInstance, node: str) -> str:
    """Disk whose shrink carries the power of a G' region (y handled separately)."""
    if node == "x":
        return "D0"
    if node.startswith("alpha"):
        return "A" + node[5:]
    if node.startswith("beta"):
        return "B" + node[4:]
    if node.startswith("y") and node != "y":
        return "D" + node[1:]
    raise KeyError(node)


def build_gprime(inst: MbsInstance) -> WeightedGraph:
    """Region graph with penetration depths (rounded up to 2^-40) as weights."""
    n = inst.n
    lam = inst.lam
    for p, q in thick_pairs(inst):
        if penetration_cmp(inst.disk(p), inst.disk(q), lam) < 0:
            raise StructureMismatch("thick pair %s:%s is thinner than lambda" % (p, q))
    vertices = ["x"]
    for i in range(1, n + 1):
        vertices += ["alpha%d" % i, "beta%d" % i, "y%d" % i]
    vertices.append("y")
    edges = []
    for (p, q), (u, v) in _gap_nodes(n).items():
        d1, d2 = inst.disk(p), inst.disk(q)
        if penetration_cmp(d1, d2, lam) >= 0:
            raise StructureMismatch("gap %s:%s is at least lambda deep" % (p, q))
        if penetration_cmp(d1, d2, 0) <= 0:
            raise StructureMismatch("gap %s:%s is already open" % (p, q))
        edges.append(Edge(u, v, penetration_ceil(d1, d2, WEIGHT_BITS), key="%s:%s" % (p, q)))
    return WeightedGraph(tuple(vertices), tuple(edges), "x", "y")


def ideal_gprime(inst: MbsInstance) -> WeightedGraph:
    """G' with the unrounded target depths (times the instance scale) as weights."""
    src = inst.source
    if src is None or inst.L is None:
        raise StructureMismatch("ideal weights need the source instance")
    targets = gap_targets(inst.L, src.a, src.b)
    g = build_gprime(inst)
    edges = [Edge(e.u, e.v, as_rational(targets[tuple(e.key.split(":"))] * inst.scale), key=e.key)
             for e in g.edges]
    return WeightedGraph(g.vertices, tuple(edges), g.source, g.sink)


def _final_disk(inst: MbsInstance, g: WeightedGraph, p: Mapping) -> str:
    """Which of A_{n+1}, B_{n+1} absorbs p(y): the cheaper activated closing edge."""
    active = activated_edges(g, p)
    closing = [(e.w, k, e.key) for k, e in enumerate(g.edges) if e.v == "y"]
    pool = [c for c in closing if c[1] in active] or closing
    return min(pool)[2].split(":")[1]


def _lift(inst: MbsInstance, g: WeightedGraph, p: Mapping, path: Path | None = None) -> ShrinkVector:
    if path is not None and path.edges and path.end == "y":
        closing = g.edges[path.edges[-1]].key.split(":")[1]
    else:
        closing = None
    out = {}
    for node, power in p.items():
        if not power:
            continue
        if node == "y":
            disk = closing or _final_disk(inst, g, p)
        else:
            disk = region_disk(inst, node)
        out[disk] = out.get(disk, 0) + power
    s = ShrinkVector(out)
    s.check_against(inst)
    return s


def lift_to_shrinks(inst: MbsInstance, p: Mapping, g: WeightedGraph | None = None,
                    path: Path | None = None) -> ShrinkVector:
    """Shrink vector of the same cost as ``p`` that opens an x-y route.

    With ``path`` given, p(y) goes to the exit disk that path leaves through,
    so the route certificate of ``path`` is the one opened.
    """
    g = build_gprime(inst) if g is None else g
    unknown = [v for v in p if v not in g]
    if unknown:
        raise InfeasiblePower("power on unknown regions %s" % unknown)
    if not is_feasible(g, p):
        raise InfeasiblePower("the powers activate no x-y path in G'")
    if path is not None:
        path.check_in(g)
        if not activates_path(g, path, p):
            raise InfeasiblePower("the powers do not activate the given path")
    return _lift(inst, g, p, path)


def route_of(g: WeightedGraph, path: Path) -> RouteCertificate:
    return RouteCertificate(tuple(tuple(g.edges[k].key.split(":")) for k in path.edges))


def _disk(inst: MbsInstance, disk_id: str):
    if disk_id not in inst:
        raise UnknownDiskId(disk_id)
    return inst.disk(disk_id)


def check_route(inst: MbsInstance, s: ShrinkVector, cert: RouteCertificate, budget=None) -> bool:
    """Whether ``s`` fits the budget and opens every gap of an x-y route."""
    budget = inst.slack_budget if budget is None else as_rational(budget)
    for pair in cert.gaps:
        for d in pair:
            _disk(inst, d)
    for d in s:
        _disk(inst, d)
    if s.cost > budget:
        return False
    structure = {}
    for pair, nodes in _gap_nodes(inst.n).items():
        structure[frozenset(pair)] = nodes
    here = "x"
    for a, b in cert.gaps:
        nodes = structure.get(frozenset((a, b)))
        if nodes is None or here not in nodes:
            return False
        here = nodes[1] if nodes[0] == here else nodes[0]
        if penetration_cmp(inst.disk(a), inst.disk(b), 0, s[a] + s[b]) > 0:
            return False
    return here == "y"


def _cross(d, q, p):
    return d[0] * (q[1] - p[1]) - d[1] * (q[0] - p[0])


def _side(d, q, p) -> int:
    v = _cross(d, q, p)
    return (v > 0) - (v < 0)


def _ahead(d, q, p):
    return d[0] * (q[0] - p[0]) + d[1] * (q[1] - p[1])


def crossing_parity(poly, p) -> int:
    """Even-odd parity of ``p`` against the closed polygon, exactly.

    A ray from ``p`` is cast in a rational direction; directions that pass
    through a vertex are retried.  Raises :class:`DegeneratePolygon` if
    ``p`` lies on the polygon or every direction grazes a vertex.
    """
    pts = [tuple(Fraction(c) for c in v) for v in poly]
    p = tuple(Fraction(c) for c in p)
    for slope in _SLOPES:
        d = (Fraction(1), slope)
        if any(_side(d, v, p) == 0 and _ahead(d, v, p) >= 0 for v in pts):
            continue
        odd = 0
        for a, b in zip(pts, pts[1:] + pts[:1]):
            sa, sb = _side(d, a, p), _side(d, b, p)
            if sa == sb:
                continue
            fa, fb = _cross(d, a, p), _cross(d, b, p)
            t = fa / (fa - fb)
            hit = (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))
            along = _ahead(d, hit, p)
            if along == 0:
                raise DegeneratePolygon("point lies on the polygon")
            if along > 0:
                odd ^= 1
        return odd
    raise DegeneratePolygon("every ray direction hits a polygon vertex")


def check_barrier(inst, s: Mapping, cert: BarrierCertificate) -> bool:
    """Whether the shrunk disks of ``cert`` still form a closed chain separating x and y.

    Consecutive disks that overlap cover the segment between their centers,
    so an x-y curve crossing the center polygon must meet a disk.
    """
    disks = [_disk(inst, d) for d in cert.disks]
    for d in s:
        _disk(inst, d)
    for a, b in zip(disks, disks[1:] + disks[:1]):
        if penetration_cmp(a, b, 0, s.get(a.id, 0) + s.get(b.id, 0)) <= 0:
            return False
    poly = [d.center for d in disks]
    return crossing_parity(poly, inst.x) != crossing_parity(poly, inst.y)


def barrier_candidates(inst: MbsInstance) -> list:
    """Closed chains that block every route through one block, or the exit."""
    n = inst.n
    out = []
    for i in range(1, n + 1):
        wall = ["Ap%d" % i] + [d.id for d in inst.corridor(i)] + ["Bp%d" % i]
        for da in (i - 1, i):
            for db in (i - 1, i):
                cyc = ["D%d" % da, "A%d" % i] + wall + ["B%d" % i, "D%d" % db]
                if da != db:
                    cyc.append("Dp%d" % i)
                out.append(BarrierCertificate(tuple(cyc)))
    k = n + 1
    wall = ["Ap%d" % k] + [d.id for d in inst.corridor(k)] + ["Bp%d" % k]
    out.append(BarrierCertificate(tuple(["D%d" % n, "A%d" % k] + wall + ["B%d" % k])))
    return out


def find_barrier(inst: MbsInstance, s: Mapping) -> BarrierCertificate | None:
    for cert in barrier_candidates(inst):
        if check_barrier(inst, s, cert):
            return cert
    return None


def simple_routes(g: WeightedGraph):
    """Every simple source-sink path, edges listed in incidence order."""
    stack = [(g.source, (g.source,), ())]
    while stack:
        v, verts, hops = stack.pop()
        if v == g.sink:
            yield Path(verts, hops)
            continue
        for k in reversed(g.incident(v)):
            u = g.edges[k].other(v)
            if u not in verts:
                stack.append((u, verts + (u,), hops + (k,)))


def truncated_greedy(g: WeightedGraph, path: Path, budget) -> PowerAssignment:
    """Greedy powers along ``path``, spent in travel order until the budget runs out."""
    full = greedy_assign(path, g)
    left = budget
    out = {}
    for v in path.vertices:
        take = min(full[v], left)
        if take > 0:
            out[v] = take
            left -= take
    return PowerAssignment(out)


@dataclass
class MbsReductionCheck:
    instance: SubsetSumInstance
    witness: tuple
    mbs: MbsInstance
    gprime: WeightedGraph
    solution: SolveResult
    budget: Rational
    edge_drift: Rational
    route_drift: Rational
    shrinks: ShrinkVector | None = None
    route: RouteCertificate | None = None
    route_ok: bool = False
    barrier: BarrierCertificate | None = None
    barrier_ok: bool = False
    exclusive: bool = True

    @property
    def yes(self) -> bool:
        return bool(self.witness)

    @property
    def feasible(self) -> bool:
        return self.solution.cost <= self.budget

    @property
    def grid_unit(self) -> Rational:
        """Length of one rounding-grid step in instance units (1 for a fresh build)."""
        return as_rational(Fraction(self.mbs.scale) / (6 * (self.instance.n + 1)))

    @property
    def drift_ok(self) -> bool:
        return self.edge_drift <= 2 * self.grid_unit and self.route_drift <= Fraction(self.mbs.scale) / 3

    @property
    def certified(self) -> bool:
        return self.route_ok if self.yes else self.barrier_ok

    @property
    def passed(self) -> bool:
        return self.yes == self.feasible and self.drift_ok and self.certified and self.exclusive

    def __bool__(self):
        return self.passed


def weight_drifts(inst: MbsInstance, g: WeightedGraph) -> dict:
    """Per G' edge: scaled weight minus scaled ideal target."""
    src = inst.source
    targets = gap_targets(inst.L, src.a, src.b)
    out = {}
    for k, e in enumerate(g.edges):
        pair = tuple(e.key.split(":"))
        out[k] = e.w - targets[pair] * inst.scale
    return out


def check_mbs_reduction(inst: SubsetSumInstance, mbs: MbsInstance | None = None) -> MbsReductionCheck:
    """Build, solve and certify the disk instance for ``inst``."""
    mbs = build(inst) if mbs is None else mbs
    g = build_gprime(mbs)
    witness = subset_sum.solve(inst)
    sol = solve_bruteforce(g)
    budget = mbs.slack_budget
    drift = weight_drifts(mbs, g)
    edge_drift = max(abs(v) for v in drift.values())
    routes = list(simple_routes(g))
    route_drift = max(sum(abs(drift[k]) for k in r.edges) for r in routes)
    check = MbsReductionCheck(inst, witness, mbs, g, sol, as_rational(budget),
                              as_rational(edge_drift), as_rational(route_drift))
    if sol.cost <= budget:
        s = lift_to_shrinks(mbs, sol.assignment, g, sol.path)
        cert = route_of(g, sol.path)
        check.shrinks, check.route = s, cert
        check.route_ok = s.cost == sol.cost and check_route(mbs, s, cert, budget)
        check.exclusive = find_barrier(mbs, s) is None
    else:
        # a budget-limited attempt along any route must leave some wall closed
        ok = True
        for r in routes:
            s = _lift(mbs, g, truncated_greedy(g, r, budget), r)
            cert = find_barrier(mbs, s)
            if cert is None:
                ok = False
                break
            if r.edges == sol.path.edges:
                check.shrinks, check.barrier = s, cert
            if check_route(mbs, s, route_of(g, r), budget):
                check.exclusive = False
        check.barrier_ok = ok and check.barrier is not None
    return check


def verify_mbs_reduction(inst: SubsetSumInstance) -> bool:
    """Subset Sum answer agrees with feasibility of the disk instance at (C + 1/3) scale."""
    return check_mbs_reduction(inst).passed
