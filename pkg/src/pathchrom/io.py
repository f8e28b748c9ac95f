"""DIMACS ``.col`` and JSON serialisation of graphs and decompositions."""

from __future__ import annotations

import json
from pathlib import Path

from .decomposition import PathDecomposition, TreeDecomposition
from .errors import InvalidParameterError, ParseError
from .graph import Graph

SCHEMA = 1


def parse_dimacs(text: str) -> Graph:
    n = None
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError("second problem line", lineno)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise ParseError(f"malformed problem line {line!r}", lineno)
            try:
                n = int(parts[2])
                int(parts[3])
            except ValueError:
                raise ParseError(f"non-integer counts in {line!r}", lineno) from None
            if n < 0:
                raise ParseError("negative vertex count", lineno)
        elif parts[0] == "e":
            if n is None:
                raise ParseError("edge line before the problem line", lineno)
            if len(parts) != 3:
                raise ParseError(f"malformed edge line {line!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"non-integer vertex in {line!r}", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"vertex out of range 1..{n} in {line!r}", lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            edges.add((min(u, v) - 1, max(u, v) - 1))
        else:
            raise ParseError(f"unknown line type {parts[0]!r}", lineno)
    if n is None:
        raise ParseError("missing problem line 'p edge <n> <m>'")
    return Graph.from_edges(n, sorted(edges))


def write_dimacs(G: Graph) -> str:
    edges = G.edges()
    lines = [f"p edge {G.n} {len(edges)}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in edges)
    return "\n".join(lines) + "\n"


def _label_json(label):
    to_json = getattr(label, "to_json", None)
    return to_json() if to_json else label


def graph_to_json(G: Graph, labels=None) -> dict:
    doc = {"schema": SCHEMA, "n": G.n, "edges": [list(e) for e in G.edges()]}
    labels = labels if labels is not None else G.labels
    if labels is not None:
        doc["labels"] = [_label_json(x) for x in labels]
    return doc


def graph_from_json(doc) -> Graph:
    if isinstance(doc, str):
        doc = json.loads(doc)
    if doc.get("schema", SCHEMA) != SCHEMA:
        raise ParseError(f"unsupported graph schema {doc.get('schema')!r}")
    try:
        n = int(doc["n"])
        edges = [(int(u), int(v)) for u, v in doc["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed graph JSON: {exc}") from None
    labels = doc.get("labels")
    if labels is not None:
        labels = [tuple(x) if isinstance(x, list) else x for x in labels]
    try:
        return Graph.from_edges(n, edges, labels)
    except InvalidParameterError as exc:
        raise ParseError(str(exc)) from None


def decomposition_to_json(D) -> dict:
    if isinstance(D, PathDecomposition):
        return {
            "schema": SCHEMA,
            "nodes": len(D.bags),
            "tree_edges": [],
            "bags": [sorted(b) for b in D.bags],
            "order": list(range(len(D.bags))),
        }
    return {
        "schema": SCHEMA,
        "nodes": D.nodes,
        "tree_edges": [list(e) for e in D.tree_edges],
        "bags": [sorted(b) for b in D.bags],
    }


def decomposition_from_json(doc):
    """Empty ``tree_edges`` means a path-decomposition in ``order`` (default: index order)."""
    if isinstance(doc, str):
        doc = json.loads(doc)
    try:
        bags = [frozenset(int(v) for v in b) for b in doc["bags"]]
        tree_edges = [(int(a), int(b)) for a, b in doc.get("tree_edges", [])]
        nodes = int(doc.get("nodes", len(bags)))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed decomposition JSON: {exc}") from None
    if nodes != len(bags):
        raise ParseError(f"'nodes' is {nodes} but {len(bags)} bags given")
    if tree_edges:
        return TreeDecomposition(tuple(tree_edges), tuple(bags))
    order = doc.get("order", list(range(len(bags))))
    if sorted(order) != list(range(len(bags))):
        raise ParseError("'order' must be a permutation of the bag indices")
    return PathDecomposition(tuple(bags[i] for i in order))


def read_graph(path, fmt: str | None = None) -> Graph:
    text = Path(path).read_text()
    if fmt is None:
        fmt = "json" if text.lstrip().startswith("{") else "dimacs"
    if fmt == "json":
        try:
            return graph_from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    return parse_dimacs(text)


def dump_json(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"
