"""Exact graph coloring on induced subgraphs given as bitmasks.

Colors are ``0..k-1``.  The searches work directly on the ambient graph's
adjacency masks so that bags of a decomposition never need to be materialised as
separate graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InvalidParameterError
from .graph import Graph, members, popcount, to_mask


@dataclass(frozen=True)
class Coloring:
    assignment: dict[int, int]
    palette_size: int

    def classes(self) -> list[frozenset]:
        out = [set() for _ in range(self.palette_size)]
        for v, c in self.assignment.items():
            out[c].add(v)
        return [frozenset(s) for s in out]


def is_proper_coloring(G: Graph, coloring: Coloring, vertices=None) -> bool:
    """Check that ``coloring`` colors ``vertices`` (default: all of G) properly within its palette."""
    targets = G.vertices if vertices is None else vertices
    a = coloring.assignment
    for v in targets:
        if v not in a or not 0 <= a[v] < coloring.palette_size:
            return False
    for v in targets:
        for u in members(G.adj[v]):
            if u in a and u in targets and a[u] == a[v]:
                return False
    return True


def greedy_clique(adj: Sequence[int], mask: int) -> list[int]:
    clique = []
    cand = mask
    while cand:
        v = max(members(cand), key=lambda x: popcount(adj[x] & cand))
        clique.append(v)
        cand &= adj[v]
    return clique


def _two_color(adj, mask):
    color = {}
    remaining = mask
    while remaining:
        cur = remaining & -remaining
        sides = [cur, 0]
        seen = cur
        p = 0
        while cur:
            nxt = 0
            for v in members(cur):
                nxt |= adj[v]
            nxt &= mask
            if nxt & sides[p]:
                return None
            nxt &= ~seen
            p ^= 1
            sides[p] |= nxt
            seen |= nxt
            cur = nxt
        for v in members(sides[0]):
            color[v] = 0
        for v in members(sides[1]):
            color[v] = 1
        remaining &= ~seen
    return color


def _dsatur_search(adj, mask, k):
    clique = greedy_clique(adj, mask)
    if len(clique) > k:
        return None
    color = {}
    classes = [0] * k
    for c, v in enumerate(clique):
        color[v] = c
        classes[c] |= 1 << v

    def search(uncolored, used):
        if not uncolored:
            return True
        pick = -1
        best = (-1, -1)
        for v in members(uncolored):
            a = adj[v]
            sat = 0
            for c in range(used):
                if a & classes[c]:
                    sat += 1
            key = (sat, popcount(a & uncolored))
            if key > best:
                best, pick = key, v
        if best[0] >= k:
            return False
        a = adj[pick]
        bit = 1 << pick
        for c in range(min(used + 1, k)):
            if a & classes[c]:
                continue
            classes[c] |= bit
            color[pick] = c
            if search(uncolored & ~bit, max(used, c + 1)):
                return True
            classes[c] &= ~bit
        color.pop(pick, None)
        return False

    if search(mask & ~to_mask(clique), len(clique)):
        return color
    return None


def color_mask(adj: Sequence[int], mask: int, k: int) -> dict[int, int] | None:
    """A proper ``k``-coloring of the subgraph induced by ``mask``, or ``None``."""
    if mask == 0:
        return {}
    if k <= 0:
        return None
    if k == 1:
        for v in members(mask):
            if adj[v] & mask:
                return None
        return {v: 0 for v in members(mask)}
    if k == 2:
        return _two_color(adj, mask)
    # vertices with fewer than k neighbours can always be colored last
    core = mask
    peeled = []
    changed = True
    while changed:
        changed = False
        for v in members(core):
            if popcount(adj[v] & core) < k:
                core &= ~(1 << v)
                peeled.append(v)
                changed = True
    color = {}
    if core:
        color = _dsatur_search(adj, core, k)
        if color is None:
            return None
    for v in reversed(peeled):
        taken = {color[u] for u in members(adj[v] & mask) if u in color}
        color[v] = next(c for c in range(k) if c not in taken)
    return color


def dsatur_greedy(adj: Sequence[int], mask: int) -> dict[int, int]:
    """Single DSATUR pass without backtracking; an upper bound on chi."""
    color: dict[int, int] = {}
    seen_colors = {v: set() for v in members(mask)}
    uncolored = mask
    while uncolored:
        v = max(members(uncolored), key=lambda x: (len(seen_colors[x]), popcount(adj[x] & uncolored)))
        c = 0
        while c in seen_colors[v]:
            c += 1
        color[v] = c
        uncolored &= ~(1 << v)
        for u in members(adj[v] & uncolored):
            seen_colors[u].add(c)
    return color


def chromatic_number_mask(adj: Sequence[int], mask: int) -> int:
    if mask == 0:
        return 0
    lo = max(1, len(greedy_clique(adj, mask)))
    hi = max(dsatur_greedy(adj, mask).values()) + 1
    for k in range(lo, hi):
        if color_mask(adj, mask, k) is not None:
            return k
    return hi


def chromatic_decision(G: Graph, k: int) -> Coloring | None:
    if k < 0:
        raise InvalidParameterError("k must be non-negative")
    found = color_mask(G.adj, G.full_mask, k)
    if found is None:
        return None
    return Coloring(found, k)


def chromatic_number(G: Graph) -> int:
    return chromatic_number_mask(G.adj, G.full_mask)


def optimal_coloring(G: Graph, vertices=None) -> Coloring:
    """An optimal coloring of ``G`` (or of the subgraph induced by ``vertices``)."""
    mask = G.full_mask if vertices is None else G.mask_of(vertices)
    k = chromatic_number_mask(G.adj, mask)
    return Coloring(color_mask(G.adj, mask, k), k)


def greedy_bound(G: Graph, order: Sequence[int]) -> int:
    """Number of colors used by first-fit coloring along ``order``."""
    if sorted(order) != list(range(G.n)):
        raise InvalidParameterError("order is not a permutation of V(G)")
    color: dict[int, int] = {}
    for v in order:
        taken = {color[u] for u in members(G.adj[v]) if u in color}
        c = 0
        while c in taken:
            c += 1
        color[v] = c
    return max(color.values()) + 1 if color else 0


def enumerate_colorings(G: Graph, k: int, vertices=None) -> Iterator[dict[int, int]]:
    """Every proper coloring with colors ``0..k-1`` of the subgraph induced by ``vertices``.

    Colorings are enumerated literally (no quotient by color permutations).
    """
    order = members(G.full_mask if vertices is None else G.mask_of(vertices))
    allowed = to_mask(order)
    color: dict[int, int] = {}

    def rec(i):
        if i == len(order):
            yield dict(color)
            return
        v = order[i]
        taken = {color[u] for u in members(G.adj[v] & allowed) if u in color}
        for c in range(k):
            if c not in taken:
                color[v] = c
                yield from rec(i + 1)
                del color[v]

    yield from rec(0)


class ColorOracle:
    """Memoised ``chi(<B>) <= k`` queries for bags ``B`` of one fixed graph.

    Each bag mask keeps a proven interval ``lo <= chi <= hi``; a query only runs a
    coloring search when the interval does not already settle it.
    """

    def __init__(self, G: Graph):
        self.graph = G
        self.adj = G.adj
        self._bounds: dict[int, list[int]] = {}
        self.hits = 0
        self.misses = 0

    def at_most(self, mask: int, k: int) -> bool:
        b = self._bounds.get(mask)
        if b is None:
            size = popcount(mask)
            b = self._bounds[mask] = [1 if mask else 0, size]
        if b[1] <= k:
            self.hits += 1
            return True
        if b[0] > k:
            self.hits += 1
            return False
        self.misses += 1
        if color_mask(self.adj, mask, k) is None:
            b[0] = k + 1
            return False
        b[1] = k
        return True

    def chi(self, mask: int) -> int:
        b = self._bounds.get(mask)
        if b is not None and b[0] == b[1]:
            self.hits += 1
            return b[0]
        value = chromatic_number_mask(self.adj, mask)
        self.misses += 1
        self._bounds[mask] = [value, value]
        return value

    def __len__(self):
        return len(self._bounds)
