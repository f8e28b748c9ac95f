"""Path- and tree-decompositions: validation, chromatic number, and the
enumeration <-> path-decomposition conversions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .coloring import ColorOracle
from .errors import InvalidParameterError, InvalidStructureError
from .graph import Graph, members

Enumeration = tuple


def check_enumeration(G: Graph, order: Sequence[int]) -> tuple[int, ...]:
    order = tuple(order)
    if sorted(order) != list(range(G.n)):
        raise InvalidParameterError("enumeration is not a permutation of V(G)")
    return order


@dataclass(frozen=True)
class PathDecomposition:
    bags: tuple[frozenset, ...]

    @classmethod
    def of(cls, bags: Iterable[Iterable[int]]) -> "PathDecomposition":
        return cls(tuple(frozenset(b) for b in bags))

    def normalized(self) -> "PathDecomposition":
        """Drop empty bags."""
        return PathDecomposition(tuple(b for b in self.bags if b))

    def as_tree(self) -> "TreeDecomposition":
        s = len(self.bags)
        return TreeDecomposition(tuple((t, t + 1) for t in range(s - 1)), self.bags)

    def __len__(self):
        return len(self.bags)


@dataclass(frozen=True)
class TreeDecomposition:
    tree_edges: tuple[tuple[int, int], ...]
    bags: tuple[frozenset, ...]

    @classmethod
    def of(cls, tree_edges, bags) -> "TreeDecomposition":
        return cls(tuple((int(a), int(b)) for a, b in tree_edges), tuple(frozenset(b) for b in bags))

    @property
    def nodes(self) -> int:
        return len(self.bags)

    def tree_adjacency(self) -> list[set[int]]:
        nbrs = [set() for _ in range(self.nodes)]
        for a, b in self.tree_edges:
            nbrs[a].add(b)
            nbrs[b].add(a)
        return nbrs


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    axiom: str | None = None
    witness: object = None

    def __bool__(self):
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "valid"
        return f"violates {self.axiom} (witness {self.witness})"


def _check_tree(D: TreeDecomposition):
    t = D.nodes
    for a, b in D.tree_edges:
        if not (0 <= a < t and 0 <= b < t) or a == b:
            raise InvalidStructureError(f"tree edge ({a}, {b}) is not between distinct nodes 0..{t - 1}")
    if len(set(frozenset(e) for e in D.tree_edges)) != len(D.tree_edges):
        raise InvalidStructureError("tree has a repeated edge")
    if t == 0:
        if D.tree_edges:
            raise InvalidStructureError("edges on an empty tree")
        return
    if len(D.tree_edges) != t - 1:
        raise InvalidStructureError(f"{t} nodes need {t - 1} tree edges, got {len(D.tree_edges)}")
    nbrs = D.tree_adjacency()
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in nbrs[x] - seen:
            seen.add(y)
            stack.append(y)
    if len(seen) != t:
        raise InvalidStructureError("tree is not connected")


def _check_bag_range(G: Graph, bags):
    for idx, bag in enumerate(bags):
        for v in bag:
            if not isinstance(v, int) or not 0 <= v < G.n:
                raise InvalidStructureError(f"bag {idx} contains vertex {v!r} outside V(G)")


def validate_tree_decomposition(G: Graph, D: TreeDecomposition) -> ValidationReport:
    _check_tree(D)
    _check_bag_range(G, D.bags)
    covered = frozenset().union(*D.bags) if D.bags else frozenset()
    for v in G.vertices:
        if v not in covered:
            return ValidationReport(False, "vertex-cover", v)
    for u, v in G.edges():
        if not any(u in b and v in b for b in D.bags):
            return ValidationReport(False, "edge-cover", (u, v))
    nbrs = D.tree_adjacency()
    for v in G.vertices:
        holding = {t for t, b in enumerate(D.bags) if v in b}
        start = next(iter(holding))
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in nbrs[x]:
                if y in holding and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if seen != holding:
            return ValidationReport(False, "connected-subtree", v)
    return ValidationReport(True)


def validate_path_decomposition(G: Graph, D: PathDecomposition) -> ValidationReport:
    _check_bag_range(G, D.bags)
    bags = D.normalized().bags
    covered = frozenset().union(*bags) if bags else frozenset()
    for v in G.vertices:
        if v not in covered:
            return ValidationReport(False, "vertex-cover", v)
    for u, v in G.edges():
        if not any(u in b and v in b for b in bags):
            return ValidationReport(False, "edge-cover", (u, v))
    for v in G.vertices:
        idx = [t for t, b in enumerate(bags) if v in b]
        if idx[-1] - idx[0] + 1 != len(idx):
            return ValidationReport(False, "consecutive", v)
    return ValidationReport(True)


def validate(G: Graph, D) -> ValidationReport:
    if isinstance(D, PathDecomposition):
        return validate_path_decomposition(G, D)
    if isinstance(D, TreeDecomposition):
        return validate_tree_decomposition(G, D)
    raise InvalidStructureError(f"not a decomposition: {type(D).__name__}")


def bag_chromatic_numbers(G: Graph, bags, oracle: ColorOracle | None = None) -> list[int]:
    oracle = oracle or ColorOracle(G)
    return [oracle.chi(G.mask_of(b)) for b in bags]


def decomposition_chromatic_number(G: Graph, D, oracle: ColorOracle | None = None) -> int:
    """Largest chromatic number of a bag; 0 for a decomposition without bags."""
    report = validate(G, D)
    if not report:
        raise InvalidStructureError(f"invalid decomposition: {report.describe()}")
    return max(bag_chromatic_numbers(G, D.bags, oracle), default=0)


def enumeration_bag_masks(G: Graph, order: Sequence[int]):
    """Yield the bags of the enumeration's path-decomposition as bitmasks, in order."""
    before = 0  # v_1..v_{l-1}
    reach = 0  # N[v_1..v_l]
    for v in order:
        reach |= G.adj[v] | (1 << v)
        yield reach & ~before
        before |= 1 << v


def path_decomposition_from_enumeration(G: Graph, order: Sequence[int]) -> PathDecomposition:
    order = check_enumeration(G, order)
    return PathDecomposition(tuple(frozenset(members(b)) for b in enumeration_bag_masks(G, order)))


def enumeration_chromatic_number(G: Graph, order: Sequence[int], oracle: ColorOracle | None = None) -> int:
    """Chromatic number of the path-decomposition induced by ``order``."""
    P = path_decomposition_from_enumeration(G, order)
    return max(bag_chromatic_numbers(G, P.bags, oracle), default=0)


def enumeration_from_path_decomposition(G: Graph, D: PathDecomposition) -> tuple[int, ...]:
    """Order vertices by the last bag containing them (ties by vertex index).

    Every bag of the induced path-decomposition is then contained in a bag of
    ``D``, so its chromatic number cannot exceed that of ``D``.
    """
    report = validate_path_decomposition(G, D)
    if not report:
        raise InvalidStructureError(f"invalid path-decomposition: {report.describe()}")
    last = {}
    for t, bag in enumerate(D.bags):
        for v in bag:
            last[v] = t
    return tuple(sorted(G.vertices, key=lambda v: (last[v], v)))


def is_special_enumeration(G: Graph, order: Sequence[int], k: int, oracle: ColorOracle | None = None) -> bool:
    """``order`` attains ``k`` and every bag of chromatic number ``k`` is entered by a
    vertex with no earlier neighbor.  ``k`` must be the path-chromatic number of G."""
    order = check_enumeration(G, order)
    oracle = oracle or ColorOracle(G)
    P = path_decomposition_from_enumeration(G, order)
    chis = bag_chromatic_numbers(G, P.bags, oracle)
    if max(chis, default=0) != k:
        return False
    before = 0
    for v, c in zip(order, chis):
        if c == k and G.adj[v] & before:
            return False
        before |= 1 << v
    return True

