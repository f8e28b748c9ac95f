"""Seeded random instances for oracle comparisons."""

from __future__ import annotations

import random

from .decomposition import PathDecomposition
from .graph import Graph


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_path_decomposition(G: Graph, rng: random.Random) -> PathDecomposition:
    """A valid path-decomposition of ``G`` built from random vertex intervals.

    Each vertex gets an interval of bag positions; an edge whose endpoints'
    intervals are disjoint has one of them stretched until they meet.  Bags may
    come out empty.
    """
    s = rng.randint(1, max(1, 2 * G.n))
    lo, hi = [], []
    for _ in G.vertices:
        a = rng.randrange(s)
        lo.append(a)
        hi.append(min(s - 1, a + rng.randrange(3)))
    edges = G.edges()
    rng.shuffle(edges)
    for u, v in edges:
        if hi[u] < lo[v] or hi[v] < lo[u]:
            first, second = (u, v) if hi[u] < lo[v] else (v, u)
            if rng.random() < 0.5:
                hi[first] = lo[second]
            else:
                lo[second] = hi[first]
    return PathDecomposition(tuple(frozenset(v for v in G.vertices if lo[v] <= t <= hi[v]) for t in range(s)))


def all_labeled_graphs(n: int):
    """Every graph on vertex set ``0..n-1`` (``2**(n choose 2)`` of them)."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(n, [e for i, e in enumerate(pairs) if bits >> i & 1])
