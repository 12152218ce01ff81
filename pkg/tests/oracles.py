"""Reference implementations that share no code with the package.

They are slow on purpose: plain enumeration, networkx for path listing,
sympy for exact surds.
"""
from __future__ import annotations

import random
from itertools import combinations, product

import networkx as nx


def grid_min_path(weights, top=None):
    """Least total power over the integer grid {0..top}^(k+1) activating a path.

    Chain minimisation: f[p] is the best cost of a prefix whose last vertex
    holds p; every grid point is considered.
    """
    top = max(weights) if top is None else top
    f = list(range(top + 1))
    for w in weights:
        f = [p + min(f[q] for q in range(top + 1) if q + p >= w) for p in range(top + 1)]
    return min(f)


def grid_min_literal(weights, top=None):
    """Same minimum by listing every grid point; only for very short paths."""
    top = max(weights) if top is None else top
    best = None
    for ps in product(range(top + 1), repeat=len(weights) + 1):
        if all(ps[i] + ps[i + 1] >= w for i, w in enumerate(weights)):
            c = sum(ps)
            best = c if best is None or c < best else best
    return best


def brute_graph_min(vertices, edges, s, t):
    """Cheapest activation cost over simple s-t paths (networkx), each scored on the grid."""
    g = nx.MultiGraph()
    g.add_nodes_from(vertices)
    for k, (u, v, w) in enumerate(edges):
        g.add_edge(u, v, key=k, w=w)
    best = None
    for path in nx.all_simple_edge_paths(g, s, t):
        ws = [g.edges[e]["w"] for e in path]
        c = grid_min_path(ws)
        best = c if best is None or c < best else best
    return best


def subset_sum_witness(a, b):
    """Lexicographically smallest sorted 1-based index tuple summing to b, by enumeration."""
    hits = []
    n = len(a)
    for r in range(1, n + 1):
        for idx in combinations(range(1, n + 1), r):
            if sum(a[i - 1] for i in idx) == b:
                hits.append(idx)
    return min(hits) if hits else ()


def random_connected(rng: random.Random, n_max=8, w_max=20, extra=6):
    n = rng.randint(2, n_max)
    verts = ["v%d" % i for i in range(n)]
    edges = []
    for i in range(1, n):
        edges.append((verts[rng.randrange(i)], verts[i], rng.randint(1, w_max)))
    for _ in range(rng.randint(0, extra)):
        u, v = rng.sample(verts, 2)
        edges.append((u, v, rng.randint(1, w_max)))
    s, t = rng.sample(verts, 2)
    return verts, edges, s, t
