"""Finite simple undirected graphs stored as per-vertex neighbor bitmasks.

Vertices are the integers ``0..n-1``.  A vertex set is passed around either as a
``frozenset`` (public API) or as an ``int`` bitmask (hot loops); ``to_mask`` and
``members`` convert between the two.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import InvalidParameterError, InvalidVertexError

VertexSet = frozenset


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> list[int]:
    """Vertices in ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    labels: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise InvalidParameterError("adjacency length differs from order")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise InvalidVertexError(f"vertex {v} has a neighbor out of range")
            if nb >> v & 1:
                raise InvalidParameterError(f"self-loop at vertex {v}")
            for u in members(nb):
                if not self.adj[u] >> v & 1:
                    raise InvalidParameterError(f"asymmetric adjacency between {u} and {v}")
        if self.labels is not None and len(self.labels) != self.n:
            raise InvalidParameterError("labels length differs from order")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "Graph":
        if n < 0:
            raise InvalidParameterError("negative order")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertexError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidParameterError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), None if labels is None else tuple(labels))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in members(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def neighbors(self, v: int) -> VertexSet:
        self._check_vertex(v)
        return frozenset(members(self.adj[v]))

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return popcount(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def closed_mask(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def neighborhood_mask(self, mask: int) -> int:
        """Closed neighborhood of the vertex set encoded by ``mask``."""
        out = mask
        for v in members(mask):
            out |= self.adj[v]
        return out

    def mask_of(self, vertices: Iterable[int]) -> int:
        mask = 0
        for v in vertices:
            self._check_vertex(v)
            mask |= 1 << v
        return mask

    def _check_vertex(self, v):
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise InvalidVertexError(f"vertex {v!r} not in 0..{self.n - 1}")

    def relabel(self, labels) -> "Graph":
        return Graph(self.n, self.adj, None if labels is None else tuple(labels))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.num_edges()})"


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameterError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(j, (j + 1) % n) for j in range(n)])


def make_complete(n: int) -> Graph:
    if n < 1:
        raise InvalidParameterError(f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def make_empty(n: int) -> Graph:
    """Edgeless graph on ``n`` vertices (``n = 0`` allowed)."""
    return Graph(n, (0,) * n)


def make_path(n: int) -> Graph:
    return Graph.from_edges(n, [(j, j + 1) for j in range(n - 1)])


def closed_neighborhood(G: Graph, U: Iterable[int]) -> VertexSet:
    return frozenset(members(G.neighborhood_mask(G.mask_of(U))))


def induced_subgraph(G: Graph, S: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``S``.

    Returns ``(H, back)`` where vertex ``i`` of ``H`` is vertex ``back[i]`` of ``G``;
    vertices keep their relative order.
    """
    back = tuple(members(G.mask_of(S)))
    position = {v: i for i, v in enumerate(back)}
    adj = []
    for v in back:
        adj.append(to_mask(position[u] for u in members(G.adj[v]) if u in position))
    labels = None if G.labels is None else tuple(G.labels[v] for v in back)
    return Graph(len(back), tuple(adj), labels), back


def components(G: Graph, mask: int | None = None) -> list[int]:
    """Connected components (as bitmasks) of the subgraph induced by ``mask``."""
    remaining = G.full_mask if mask is None else mask
    comps = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            for v in members(frontier):
                grow |= G.adj[v]
            frontier = grow & remaining & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def is_connected(G: Graph, mask: int | None = None) -> bool:
    return len(components(G, mask)) <= 1


def is_triangle_free(G: Graph) -> bool:
    return all(G.adj[u] & G.adj[v] == 0 for u, v in G.edges())


def check_induced_embedding(H: Graph, G: Graph, mapping: Mapping[int, int] | Sequence[int]) -> bool:
    """True iff ``mapping`` is an injective map V(H) -> V(G) preserving edges and non-edges."""
    if isinstance(mapping, Mapping):
        missing = [v for v in H.vertices if v not in mapping]
        if missing:
            raise InvalidParameterError(f"map is not total on V(H); missing {missing[:5]}")
        image = [mapping[v] for v in H.vertices]
    else:
        if len(mapping) != H.n:
            raise InvalidParameterError(f"map has {len(mapping)} entries, H has {H.n} vertices")
        image = list(mapping)
    for x in image:
        G._check_vertex(x)
    if len(set(image)) != len(image):
        return False
    for u in range(H.n):
        for v in range(u + 1, H.n):
            if H.has_edge(u, v) != G.has_edge(image[u], image[v]):
                return False
    return True


# --- vertex connectivity -------------------------------------------------------

class _SplitNetwork:
    """Unit-capacity vertex-split flow network; vertex v becomes in=2v, out=2v+1."""

    def __init__(self, G: Graph):
        self.size = 2 * G.n
        self.head: list[list[int]] = [[] for _ in range(self.size)]
        self.to: list[int] = []
        self.base_cap: list[int] = []
        big = G.n + 1
        for v in range(G.n):
            self._arc(2 * v, 2 * v + 1, 1)
        for u, v in G.edges():
            self._arc(2 * u + 1, 2 * v, big)
            self._arc(2 * v + 1, 2 * u, big)

    def _arc(self, a, b, cap):
        self.head[a].append(len(self.to))
        self.to.append(b)
        self.base_cap.append(cap)
        self.head[b].append(len(self.to))
        self.to.append(a)
        self.base_cap.append(0)

    def max_flow(self, source: int, sink: int, limit: int) -> tuple[int, list[int]]:
        """Augment until ``limit`` is reached; returns (flow, residual capacities)."""
        cap = list(self.base_cap)
        flow = 0
        while flow < limit:
            parent_arc = [-1] * self.size
            parent_arc[source] = -2
            queue = deque([source])
            while queue and parent_arc[sink] == -1:
                x = queue.popleft()
                for a in self.head[x]:
                    y = self.to[a]
                    if cap[a] > 0 and parent_arc[y] == -1:
                        parent_arc[y] = a
                        queue.append(y)
            if parent_arc[sink] == -1:
                break
            y = sink
            while y != source:
                a = parent_arc[y]
                cap[a] -= 1
                cap[a ^ 1] += 1
                y = self.to[a ^ 1]
            flow += 1
        return flow, cap

    def reachable(self, source: int, cap: list[int]) -> set[int]:
        seen = {source}
        queue = deque([source])
        while queue:
            x = queue.popleft()
            for a in self.head[x]:
                y = self.to[a]
                if cap[a] > 0 and y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen


def minimum_vertex_cut(G: Graph) -> tuple[int, VertexSet | None]:
    """Vertex connectivity together with a minimum separating set.

    The separating set is ``None`` for complete graphs, whose connectivity is
    ``n - 1`` by convention.
    """
    if G.n == 0:
        raise InvalidParameterError("vertex connectivity of the empty graph is undefined")
    best = G.n - 1
    best_cut = None
    net = _SplitNetwork(G)
    for s in range(G.n):
        for t in range(s + 1, G.n):
            if G.adj[s] >> t & 1 or best == 0:
                continue
            flow, cap = net.max_flow(2 * s + 1, 2 * t, best)
            if flow < best:
                seen = net.reachable(2 * s + 1, cap)
                best = flow
                best_cut = frozenset(v for v in range(G.n) if 2 * v in seen and 2 * v + 1 not in seen)
    if best_cut is None and best < G.n - 1:
        raise AssertionError("connectivity below n-1 without a witness cut")
    return best, best_cut


def vertex_connectivity(G: Graph) -> int:
    return minimum_vertex_cut(G)[0]


def separates(G: Graph, cut: Iterable[int]) -> bool:
    """True iff deleting ``cut`` leaves at least two components."""
    return len(components(G, G.full_mask & ~G.mask_of(cut))) >= 2
