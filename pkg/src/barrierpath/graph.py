"""Graphs, paths, power assignments and the activation predicate.

All weights, coefficients and powers are exact rationals (``int`` or
:class:`fractions.Fraction`).  An edge ``uv`` is activated by a power
assignment ``p`` when ``alpha * p(u) + beta * p(v) >= w``; equality counts.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence, Union

Rational = Union[int, Fraction]
Vertex = Hashable


class GraphError(ValueError):
    pass


class PathNotInGraph(GraphError):
    pass


class NonUnitCoefficients(GraphError):
    pass


def as_rational(value) -> Rational:
    """Coerce ints, Fractions and ``"p/q"`` / decimal strings to an exact rational.

    Integral results are returned as ``int`` so that integer instances stay on
    the fast path.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact rationals: %r" % value)
    q = Fraction(value)
    return q.numerator if q.denominator == 1 else q


@dataclass(frozen=True)
class Edge:
    u: Vertex
    v: Vertex
    w: Rational
    alpha: Rational = 1
    beta: Rational = 1
    key: str | None = None

    def __post_init__(self):
        for name in ("w", "alpha", "beta"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if self.u == self.v:
            raise GraphError("self-loop at %r" % (self.u,))
        if self.w <= 0:
            raise GraphError("edge %r-%r has non-positive weight %s" % (self.u, self.v, self.w))
        if self.alpha <= 0 or self.beta <= 0:
            raise GraphError("edge %r-%r needs positive activation coefficients" % (self.u, self.v))

    @property
    def unit(self) -> bool:
        return self.alpha == 1 and self.beta == 1

    def other(self, x: Vertex) -> Vertex:
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise GraphError("%r is not an endpoint of %r-%r" % (x, self.u, self.v))

    def coefficient(self, x: Vertex) -> Rational:
        """Coefficient multiplying the power of endpoint ``x``."""
        return self.alpha if x == self.u else self.beta

    def activated_by(self, pu: Rational, pv: Rational) -> bool:
        return self.alpha * pu + self.beta * pv >= self.w


@dataclass(frozen=True)
class WeightedGraph:
    """Undirected multigraph with terminals ``source`` and ``sink``."""

    vertices: tuple
    edges: tuple
    source: Vertex
    sink: Vertex
    _index: dict = field(init=False, repr=False, compare=False)
    _incident: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        index = {}
        for v in self.vertices:
            if v in index:
                raise GraphError("duplicate vertex %r" % (v,))
            index[v] = len(index)
        if self.source not in index or self.sink not in index:
            raise GraphError("terminals must be vertices of the graph")
        if self.source == self.sink:
            raise GraphError("source and sink must differ")
        incident = [[] for _ in self.vertices]
        for k, e in enumerate(self.edges):
            if not isinstance(e, Edge):
                raise GraphError("edges must be Edge instances")
            if e.u not in index or e.v not in index:
                raise GraphError("edge %r-%r uses an unknown vertex" % (e.u, e.v))
            incident[index[e.u]].append(k)
            incident[index[e.v]].append(k)
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_incident", tuple(tuple(x) for x in incident))

    @classmethod
    def build(cls, edges: Iterable, source: Vertex, sink: Vertex, vertices: Sequence | None = None):
        """Convenience constructor from ``(u, v, w[, alpha, beta])`` tuples or Edges.

        Vertex order is ``vertices`` if given, else order of first appearance
        (terminals first).
        """
        es = [e if isinstance(e, Edge) else Edge(*e) for e in edges]
        if vertices is None:
            seen = dict.fromkeys([source, sink])
            for e in es:
                seen.setdefault(e.u)
                seen.setdefault(e.v)
            vertices = list(seen)
        return cls(tuple(vertices), tuple(es), source, sink)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def index(self, v: Vertex) -> int:
        return self._index[v]

    def incident(self, v: Vertex) -> tuple:
        """Indices of the edges incident to ``v``."""
        return self._incident[self._index[v]]

    def __contains__(self, v) -> bool:
        return v in self._index

    @property
    def unit(self) -> bool:
        return all(e.unit for e in self.edges)

    @property
    def integral(self) -> bool:
        return all(isinstance(e.w, int) for e in self.edges)

    @property
    def max_weight(self) -> Rational:
        return max((e.w for e in self.edges), default=0)

    def scaled(self, factor: Rational) -> "WeightedGraph":
        es = [Edge(e.u, e.v, e.w * factor, e.alpha, e.beta, e.key) for e in self.edges]
        return WeightedGraph(self.vertices, tuple(es), self.source, self.sink)


class PowerAssignment(Mapping):
    """Nonnegative power per vertex; missing vertices have power 0."""

    __slots__ = ("_powers",)

    def __init__(self, powers: Mapping | Iterable = ()):
        items = powers.items() if isinstance(powers, Mapping) else powers
        clean = {}
        for v, p in items:
            p = as_rational(p)
            if p < 0:
                raise ValueError("negative power %s at %r" % (p, v))
            if p:
                clean[v] = p
        self._powers = clean

    def __getitem__(self, v) -> Rational:
        return self._powers.get(v, 0)

    def __iter__(self):
        return iter(self._powers)

    def __len__(self) -> int:
        return len(self._powers)

    def __contains__(self, v) -> bool:
        return v in self._powers

    def __eq__(self, other) -> bool:
        if isinstance(other, PowerAssignment):
            return self._powers == other._powers
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._powers.items()))

    def __repr__(self) -> str:
        return "PowerAssignment(%r)" % (self._powers,)

    @property
    def cost(self) -> Rational:
        return sum(self._powers.values(), 0)


@dataclass(frozen=True)
class Path:
    """Simple path: vertices ``v0..vn`` and the edge index used for each hop."""

    vertices: tuple
    edges: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        if not self.vertices:
            raise GraphError("a path needs at least one vertex")
        if len(self.edges) != len(self.vertices) - 1:
            raise GraphError("a path on %d vertices needs %d edges" % (len(self.vertices), len(self.vertices) - 1))
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError("path repeats a vertex")

    @classmethod
    def along(cls, g: WeightedGraph, vertices: Sequence) -> "Path":
        """Path through ``vertices`` using the first listed edge for each hop."""
        hops = []
        for a, b in zip(vertices, vertices[1:]):
            if a not in g or b not in g:
                raise PathNotInGraph("vertex not in graph on hop %r-%r" % (a, b))
            for k in g.incident(a):
                if g.edges[k].other(a) == b:
                    hops.append(k)
                    break
            else:
                raise PathNotInGraph("no edge %r-%r" % (a, b))
        return cls(tuple(vertices), tuple(hops))

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def start(self):
        return self.vertices[0]

    @property
    def end(self):
        return self.vertices[-1]

    def check_in(self, g: WeightedGraph) -> None:
        for i, k in enumerate(self.edges):
            if not 0 <= k < len(g.edges):
                raise PathNotInGraph("edge index %d out of range" % k)
            e = g.edges[k]
            if {e.u, e.v} != {self.vertices[i], self.vertices[i + 1]}:
                raise PathNotInGraph("edge %d does not join %r and %r" % (k, self.vertices[i], self.vertices[i + 1]))
        if len(self.vertices) == 1 and self.vertices[0] not in g:
            raise PathNotInGraph("vertex %r not in graph" % (self.vertices[0],))

    def weights(self, g: WeightedGraph) -> list:
        return [g.edges[k].w for k in self.edges]


def activated_edges(g: WeightedGraph, p: Mapping) -> frozenset:
    """Indices of the edges whose activation inequality holds under ``p``."""
    return frozenset(
        k for k, e in enumerate(g.edges) if e.activated_by(p.get(e.u, 0), p.get(e.v, 0))
    )


def connects(g: WeightedGraph, edge_ids: Iterable[int]) -> bool:
    """Whether the given edge subset contains a source-sink path."""
    adj = {}
    for k in edge_ids:
        e = g.edges[k]
        adj.setdefault(e.u, []).append(e.v)
        adj.setdefault(e.v, []).append(e.u)
    seen = {g.source}
    todo = deque([g.source])
    while todo:
        v = todo.popleft()
        if v == g.sink:
            return True
        for x in adj.get(v, ()):
            if x not in seen:
                seen.add(x)
                todo.append(x)
    return False


def is_feasible(g: WeightedGraph, p: Mapping) -> bool:
    return connects(g, activated_edges(g, p))


def activates_path(g: WeightedGraph, path: Path, p: Mapping) -> bool:
    return all(g.edges[k].activated_by(p.get(g.edges[k].u, 0), p.get(g.edges[k].v, 0)) for k in path.edges)
