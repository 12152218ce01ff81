"""Line-based text formats.

Every format allows blank lines and ``#`` comments.  Numbers are decimal
integers or ``p/q`` rationals, and are written back the same way so output
is byte-for-byte deterministic.
"""
from __future__ import annotations

from fractions import Fraction

from .bridge import BarrierCertificate, RouteCertificate, ShrinkVector
from .geom import ROLES, Disk, Point
from .graph import Edge, Path, PowerAssignment, WeightedGraph, as_rational
from .mbs import MbsInstance
from .solve import SolveResult
from .subset_sum import SubsetSumInstance


class FormatError(ValueError):
    def __init__(self, msg: str, line: int | None = None):
        self.line = line
        super().__init__("line %d: %s" % (line, msg) if line else msg)


def fmt(v) -> str:
    v = as_rational(v)
    if isinstance(v, Fraction):
        return "%d/%d" % (v.numerator, v.denominator)
    return str(v)


def _num(tok: str, line: int):
    try:
        return as_rational(Fraction(tok)) if "/" in tok else int(tok)
    except (ValueError, ZeroDivisionError):
        raise FormatError("bad number %r" % tok, line) from None


def _int(tok: str, line: int) -> int:
    v = _num(tok, line)
    if not isinstance(v, int):
        raise FormatError("expected an integer, got %r" % tok, line)
    return v


def _lines(text: str):
    for k, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].split()
        if body:
            yield k, body


def _expect(toks, count, line, what):
    if len(toks) != count:
        raise FormatError("%s takes %d fields" % (what, count - 1), line)


# graph ---------------------------------------------------------------------

def dump_graph(g: WeightedGraph, budget=None) -> str:
    out = ["mip %d %d" % (g.n, len(g.edges)), "terminals %s %s" % (g.source, g.sink)]
    if budget is not None:
        out.append("budget %s" % fmt(budget))
    # vertex lines only when edge order alone would not reproduce the vertex list
    seen = []
    for v in (g.source, g.sink):
        if v not in seen:
            seen.append(v)
    for e in g.edges:
        for v in (e.u, e.v):
            if v not in seen:
                seen.append(v)
    if seen != list(g.vertices):
        out += ["vertex %s" % v for v in g.vertices]
    for e in g.edges:
        tail = "" if e.unit else " %s %s" % (fmt(e.alpha), fmt(e.beta))
        out.append("edge %s %s %s%s" % (e.u, e.v, fmt(e.w), tail))
    return "\n".join(out) + "\n"


def parse_graph(text: str):
    """Returns ``(graph, budget or None)``."""
    header = terms = None
    budget = None
    vertices, edges = [], []
    for k, toks in _lines(text):
        tag = toks[0]
        if header is None:
            if tag != "mip":
                raise FormatError("expected 'mip <n> <m>' header", k)
            _expect(toks, 3, k, "mip")
            header = (_int(toks[1], k), _int(toks[2], k))
        elif tag == "terminals":
            _expect(toks, 3, k, "terminals")
            terms = (toks[1], toks[2])
        elif tag == "budget":
            _expect(toks, 2, k, "budget")
            budget = _num(toks[1], k)
        elif tag == "vertex":
            _expect(toks, 2, k, "vertex")
            vertices.append(toks[1])
        elif tag == "edge":
            if len(toks) not in (4, 6):
                raise FormatError("edge takes u v w [alpha beta]", k)
            nums = [_num(t, k) for t in toks[3:]]
            try:
                edges.append(Edge(toks[1], toks[2], *nums))
            except ValueError as exc:
                raise FormatError(str(exc), k) from None
        else:
            raise FormatError("unknown record %r" % tag, k)
    if header is None:
        raise FormatError("empty graph file")
    if terms is None:
        raise FormatError("missing terminals line")
    if len(edges) != header[1]:
        raise FormatError("header promises %d edges, found %d" % (header[1], len(edges)))
    try:
        g = WeightedGraph.build(edges, terms[0], terms[1], vertices or None)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    if g.n != header[0]:
        raise FormatError("header promises %d vertices, found %d" % (header[0], g.n))
    return g, budget


# solution ------------------------------------------------------------------

def dump_solution(sol: SolveResult) -> str:
    out = ["cost %s" % fmt(sol.cost)]
    out += ["power %s %s" % (v, fmt(sol.assignment[v])) for v in sol.path.vertices if sol.assignment[v]]
    out.append("path " + " ".join(str(v) for v in sol.path.vertices))
    return "\n".join(out) + "\n"


def parse_solution(text: str, g: WeightedGraph | None = None):
    """Returns ``(cost, PowerAssignment, vertex list)``; the path is resolved against ``g`` if given."""
    cost, powers, path = None, {}, None
    for k, toks in _lines(text):
        if toks[0] == "cost":
            _expect(toks, 2, k, "cost")
            cost = _num(toks[1], k)
        elif toks[0] == "power":
            _expect(toks, 3, k, "power")
            powers[toks[1]] = _num(toks[2], k)
        elif toks[0] == "path":
            path = toks[1:]
        else:
            raise FormatError("unknown record %r" % toks[0], k)
    if cost is None:
        raise FormatError("missing cost line")
    if g is not None and path is not None:
        path = Path.along(g, path)
    return cost, PowerAssignment(powers), path


# subset sum ----------------------------------------------------------------

def dump_subset_sum(inst: SubsetSumInstance) -> str:
    return "subsetsum %d %d\na %s\n" % (inst.n, inst.b, " ".join(map(str, inst.a)))


def parse_subset_sum(text: str) -> SubsetSumInstance:
    header, a = None, None
    for k, toks in _lines(text):
        if toks[0] == "subsetsum":
            _expect(toks, 3, k, "subsetsum")
            header = (_int(toks[1], k), _int(toks[2], k))
        elif toks[0] == "a":
            if header is None:
                raise FormatError("'a' line before header", k)
            a = tuple(_int(t, k) for t in toks[1:])
            if len(a) != header[0]:
                raise FormatError("expected %d numbers, found %d" % (header[0], len(a)), k)
        else:
            raise FormatError("unknown record %r" % toks[0], k)
    if header is None or a is None:
        raise FormatError("need a 'subsetsum' header and an 'a' line")
    try:
        return SubsetSumInstance(a, header[1])
    except ValueError as exc:
        raise FormatError(str(exc)) from None


# disk instances ------------------------------------------------------------

def dump_mbs(inst: MbsInstance) -> str:
    out = [
        "mbs %d" % len(inst.disks),
        "budget %s" % fmt(inst.budget),
        "lambda %s" % fmt(inst.lam),
        "scale %s" % fmt(inst.scale),
    ]
    if inst.source is not None:
        out.append("source %d %s" % (inst.source.b, " ".join(map(str, inst.source.a))))
    out.append("point x %s %s" % (fmt(inst.x[0]), fmt(inst.x[1])))
    out.append("point y %s %s" % (fmt(inst.y[0]), fmt(inst.y[1])))
    for i, m in enumerate(inst.markers, start=1):
        out.append("marker y%d %s %s" % (i, fmt(m[0]), fmt(m[1])))
    for d in inst.disks:
        out.append("disk %s %s %s %s %s" % (d.id, d.role, fmt(d.center[0]), fmt(d.center[1]), fmt(d.radius)))
    return "\n".join(out) + "\n"


def parse_mbs(text: str) -> MbsInstance:
    count = budget = lam = x = y = source = None
    scale = 1
    markers = {}
    disks = []
    for k, toks in _lines(text):
        tag = toks[0]
        if count is None:
            if tag != "mbs":
                raise FormatError("expected 'mbs <num_disks>' header", k)
            _expect(toks, 2, k, "mbs")
            count = _int(toks[1], k)
        elif tag in ("budget", "lambda", "scale"):
            _expect(toks, 2, k, tag)
            v = _num(toks[1], k)
            if tag == "budget":
                budget = v
            elif tag == "lambda":
                lam = v
            else:
                scale = v
        elif tag == "source":
            if len(toks) < 3:
                raise FormatError("source takes b a1 .. an", k)
            try:
                source = SubsetSumInstance(tuple(_int(t, k) for t in toks[2:]), _int(toks[1], k))
            except ValueError as exc:
                raise FormatError(str(exc), k) from None
        elif tag == "point":
            _expect(toks, 4, k, "point")
            p = Point(_num(toks[2], k), _num(toks[3], k))
            if toks[1] == "x":
                x = p
            elif toks[1] == "y":
                y = p
            else:
                raise FormatError("point name must be x or y", k)
        elif tag == "marker":
            _expect(toks, 4, k, "marker")
            name = toks[1]
            if not (name.startswith("y") and name[1:].isdigit()):
                raise FormatError("marker names look like y<i>", k)
            markers[int(name[1:])] = Point(_num(toks[2], k), _num(toks[3], k))
        elif tag == "disk":
            _expect(toks, 6, k, "disk")
            if toks[2] not in ROLES:
                raise FormatError("unknown role %r" % toks[2], k)
            try:
                disks.append(Disk(Point(_num(toks[3], k), _num(toks[4], k)), _num(toks[5], k), toks[1], toks[2]))
            except ValueError as exc:
                raise FormatError(str(exc), k) from None
        else:
            raise FormatError("unknown record %r" % tag, k)
    if count is None:
        raise FormatError("empty instance file")
    for name, v in (("budget", budget), ("lambda", lam), ("point x", x), ("point y", y)):
        if v is None:
            raise FormatError("missing %s line" % name)
    if len(disks) != count:
        raise FormatError("header promises %d disks, found %d" % (count, len(disks)))
    if sorted(markers) != list(range(1, len(markers) + 1)):
        raise FormatError("markers must be numbered y1..yn")
    L = 2 * sum(source.a) + 2 if source is not None else None
    try:
        return MbsInstance(tuple(disks), x, y, tuple(markers[i] for i in sorted(markers)),
                           budget, lam, scale, L, source)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


# shrinks and certificates --------------------------------------------------

def dump_shrinks(s: ShrinkVector) -> str:
    out = ["shrink %s %s" % (k, fmt(v)) for k, v in s.items()]
    out.append("cost %s" % fmt(s.cost))
    return "\n".join(out) + "\n"


def parse_shrinks(text: str) -> ShrinkVector:
    vals, cost = {}, None
    for k, toks in _lines(text):
        if toks[0] == "shrink":
            _expect(toks, 3, k, "shrink")
            v = _num(toks[2], k)
            if v < 0:
                raise FormatError("negative shrink", k)
            vals[toks[1]] = vals.get(toks[1], 0) + v
        elif toks[0] == "cost":
            _expect(toks, 2, k, "cost")
            cost = _num(toks[1], k)
        else:
            raise FormatError("unknown record %r" % toks[0], k)
    s = ShrinkVector(vals)
    if cost is not None and cost != s.cost:
        raise FormatError("cost line %s disagrees with the shrinks (%s)" % (fmt(cost), fmt(s.cost)))
    return s


def dump_certificate(cert) -> str:
    if isinstance(cert, RouteCertificate):
        return "route " + " ".join("%s:%s" % g for g in cert.gaps) + "\n"
    return "barrier " + " ".join(cert.disks) + "\n"


def parse_certificate(text: str):
    found = None
    for k, toks in _lines(text):
        if found is not None:
            raise FormatError("only one certificate per file", k)
        if toks[0] == "route":
            gaps = []
            for t in toks[1:]:
                parts = t.split(":")
                if len(parts) != 2 or not all(parts):
                    raise FormatError("route gaps look like id:id, got %r" % t, k)
                gaps.append(tuple(parts))
            found = RouteCertificate(tuple(gaps))
        elif toks[0] == "barrier":
            if len(toks) < 4:
                raise FormatError("a barrier needs at least three disks", k)
            found = BarrierCertificate(tuple(toks[1:]))
        else:
            raise FormatError("unknown certificate kind %r" % toks[0], k)
    if found is None:
        raise FormatError("empty certificate file")
    return found
