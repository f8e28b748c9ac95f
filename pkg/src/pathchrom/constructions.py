"""Graph constructions: the row product R_m(G), Mycielski graphs, and the
explicit certificates built on them (block embeddings, the star
tree-decomposition of R_m(C_n), the row-major enumeration of R_m(G), and the
embedding of R_m(M_n) into a larger Mycielski graph)."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .coloring import optimal_coloring
from .decomposition import TreeDecomposition, check_enumeration
from .errors import InvalidParameterError, InvalidVertexError, PreconditionError
from .graph import Graph


@dataclass(frozen=True, order=True)
class RmLabel:
    """Vertex ``(row, base)`` of R_m(G); ``base is None`` is the apex of the row."""

    row: int
    base: int | None

    @property
    def is_apex(self) -> bool:
        return self.base is None

    def __str__(self):
        return f"({self.row},v0)" if self.base is None else f"({self.row},v{self.base + 1})"

    def to_json(self):
        return [self.row, self.base]


@dataclass(frozen=True, order=True)
class MycielskiLabel:
    """Vertex ``v^level_index`` of a Mycielski graph.

    At level 2 the indices are 1 and 2.  At a higher level, index 0 is the new
    apex and index ``y >= 1`` is the shadow of vertex ``y - 1`` of the previous
    graph.
    """

    level: int
    index: int

    def __str__(self):
        return f"v^{self.level}_{self.index}"

    def to_json(self):
        return [self.level, self.index]


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    labels: tuple
    _index: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.labels) != self.graph.n:
            raise InvalidParameterError("one label per vertex required")
        index = {lab: v for v, lab in enumerate(self.labels)}
        if len(index) != len(self.labels):
            raise InvalidParameterError("labels are not distinct")
        object.__setattr__(self, "_index", index)

    def index(self, label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise InvalidVertexError(f"no vertex labelled {label}") from None

    @property
    def n(self) -> int:
        return self.graph.n


@dataclass(frozen=True)
class RProduct(LabeledGraph):
    base: Graph = None
    m: int = 0

    def vertex(self, row: int, base: int | None) -> int:
        """Index of ``(row, base)``: ``(row - 1)(n + 1) + j`` with ``j = 0`` the apex."""
        if not 1 <= row <= self.m:
            raise InvalidParameterError(f"row {row} outside 1..{self.m}")
        if base is not None and not 0 <= base < self.base.n:
            raise InvalidVertexError(f"base vertex {base} outside V(G)")
        return (row - 1) * (self.base.n + 1) + (0 if base is None else base + 1)


def r_product(G: Graph, m: int) -> RProduct:
    if m < 1:
        raise InvalidParameterError(f"m must be positive, got {m}")
    n = G.n
    width = n + 1

    def idx(i, j):
        return (i - 1) * width + j

    edges = []
    for i in range(1, m + 1):
        edges.extend((idx(i, 0), idx(i, v + 1)) for v in range(n))
    base_edges = G.edges()
    for i in range(1, m + 1):
        for i2 in range(i + 1, m + 1):
            for u, v in base_edges:
                edges.append((idx(i, u + 1), idx(i2, v + 1)))
                edges.append((idx(i, v + 1), idx(i2, u + 1)))
    labels = tuple(RmLabel(i, None if j == 0 else j - 1) for i in range(1, m + 1) for j in range(width))
    graph = Graph.from_edges(m * width, edges, labels=[str(x) for x in labels])
    return RProduct(graph, labels, base=G, m=m)


def block(R: RProduct, rows: Iterable[int], bases: Iterable[int | None]) -> frozenset:
    """Vertex set ``{(i, v) : i in rows, v in bases}``; ``None`` in ``bases`` is the apex."""
    bases = list(bases)
    return frozenset(R.vertex(i, v) for i in rows for v in bases)


def embed_into_block(G: Graph, U: Iterable[int], rows: Iterable[int], extra: tuple[int, int] | None = None):
    """Map ``U`` into the block ``[rows, U]`` so that the image induces a copy of ``<U>``.

    Color classes of an optimal coloring of ``<U>`` go to the smallest rows, one
    class per row.  With ``extra = (i_star, v_star)``, where ``i_star`` is a row
    outside ``rows`` and ``v_star`` a vertex outside ``U``, the map also sends
    ``v_star`` to ``(i_star, v_star)``.

    Returns a dict ``vertex of G -> RmLabel``.
    """
    U = sorted(set(U))
    rows = sorted(set(rows))
    for v in U:
        G._check_vertex(v)
    coloring = optimal_coloring(G, U)
    if len(rows) < coloring.palette_size:
        raise PreconditionError(f"{len(rows)} rows cannot hold a graph of chromatic number {coloring.palette_size}")
    f = {v: RmLabel(rows[coloring.assignment[v]], v) for v in U}
    if extra is not None:
        i_star, v_star = extra
        if i_star in rows or v_star in f:
            raise PreconditionError("extra vertex must use a new row and a vertex outside U")
        G._check_vertex(v_star)
        f[v_star] = RmLabel(i_star, v_star)
    return f


def mycielski_order(k: int) -> int:
    return 3 * 2 ** (k - 2) - 1


def mycielski(k: int) -> LabeledGraph:
    """The ``k``-Mycielski graph.  ``M_{k-1}`` occupies the first vertex indices of
    ``M_k``, followed by the shadows in the order of the vertices they correspond
    to, then the apex."""
    if k < 2:
        raise InvalidParameterError(f"Mycielski graphs start at k = 2, got {k}")
    adj = [0b10, 0b01]
    labels = [MycielskiLabel(2, 1), MycielskiLabel(2, 2)]
    for level in range(3, k + 1):
        N = len(adj)
        new = list(adj) + [0] * (N + 1)
        w = 2 * N
        for y in range(N):
            u = N + y
            new[u] = adj[y]
            for x in range(N):
                if adj[y] >> x & 1:
                    new[x] |= 1 << u
            new[u] |= 1 << w
            new[w] |= 1 << u
        adj = new
        labels += [MycielskiLabel(level, y + 1) for y in range(N)] + [MycielskiLabel(level, 0)]
    graph = Graph(len(adj), tuple(adj), tuple(str(x) for x in labels))
    return LabeledGraph(graph, tuple(labels))


def mycielski_embedding(n: int, m: int, r: int) -> dict[int, int]:
    """Induced embedding of R_m(M_n) into M_r (requires ``r >= m + n``).

    Row ``i`` of R_m(M_n) goes to level ``n + i`` of M_r: base vertex ``y`` to the
    shadow of ``v^n_y`` and the apex to that level's apex.  Returns a dict from
    vertex indices of ``r_product(mycielski(n).graph, m)`` to vertex indices of
    ``mycielski(r).graph``.
    """
    if n < 2 or m < 1:
        raise PreconditionError(f"need n >= 2 and m >= 1, got n={n}, m={m}")
    if r < m + n:
        raise PreconditionError(f"M_{r} is too small to hold R_{m}(M_{n}); need r >= {m + n}")
    base_n = mycielski_order(n)
    width = base_n + 1
    f = {}
    for i in range(1, m + 1):
        prev = mycielski_order(n + i - 1)
        f[(i - 1) * width] = 2 * prev
        for y in range(base_n):
            f[(i - 1) * width + y + 1] = prev + y
    return f


def star_decomposition_rm_cycle(n: int, m: int) -> TreeDecomposition:
    """Star tree-decomposition of R_m(C_n) whose bags are all bipartite.

    Node 0 is the center holding every base copy of ``v_2..v_n``; node ``s``
    holds row ``s`` entirely plus every copy of ``v_2`` and ``v_n``.
    """
    if n < 4:
        raise PreconditionError(f"the star decomposition needs n >= 4, got {n}")
    if m < 1:
        raise PreconditionError(f"m must be positive, got {m}")
    width = n + 1

    def idx(i, j):
        return (i - 1) * width + j

    rows = range(1, m + 1)
    center = frozenset(idx(i, j) for i in rows for j in range(2, n + 1))
    rim = frozenset(idx(i, j) for i in rows for j in (2, n))
    leaves = [frozenset(idx(s, j) for j in range(width)) | rim for s in rows]
    return TreeDecomposition(tuple((0, s) for s in rows), (center, *leaves))


def mu_enumeration(G: Graph, order: Sequence[int], m: int) -> tuple[int, ...]:
    """Enumeration of R_m(G) that lists, for each vertex of ``order`` in turn, its
    copies in rows ``1..m``, and finally the ``m`` apexes."""
    order = check_enumeration(G, order)
    if m < 1:
        raise InvalidParameterError(f"m must be positive, got {m}")
    width = G.n + 1
    out = [(i - 1) * width + v + 1 for v in order for i in range(1, m + 1)]
    out.extend((i - 1) * width for i in range(1, m + 1))
    return tuple(out)
