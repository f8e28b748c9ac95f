import itertools

import networkx as nx
import pytest
from hypothesis import settings
from hypothesis import strategies as st

from pathchrom.graph import Graph

# numba compiles on first use, which would trip per-example deadlines
settings.register_profile("default", deadline=None)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=0, max_n=6):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


@st.composite
def graphs_with_enumeration(draw, min_n=1, max_n=6):
    G = draw(graphs(min_n, max_n))
    return G, tuple(draw(st.permutations(range(G.n))))


def to_nx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def from_nx(H: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(H.nodes))}
    return Graph.from_edges(len(index), [(index[u], index[v]) for u, v in H.edges])


def exhaustive_chi(G: Graph, vertices=None) -> int:
    """Chromatic number by trying every color assignment; only for tiny inputs."""
    vs = list(G.vertices if vertices is None else vertices)
    if not vs:
        return 0
    edges = [(u, v) for u, v in G.edges() if u in vs and v in vs]
    pos = {v: i for i, v in enumerate(vs)}
    for k in range(1, len(vs) + 1):
        for colors in itertools.product(range(k), repeat=len(vs)):
            if all(colors[pos[u]] != colors[pos[v]] for u, v in edges):
                return k
    return len(vs)


def literal_bags(G: Graph, order):
    """X_l = N[{v_1..v_l}] minus {v_1..v_(l-1)}, evaluated with plain Python sets."""
    out = []
    for ell in range(1, len(order) + 1):
        prefix = set(order[:ell])
        closed = set(prefix)
        for u in prefix:
            closed.update(w for w in G.vertices if G.has_edge(u, w))
        out.append(frozenset(closed - set(order[: ell - 1])))
    return out


@pytest.fixture(scope="session")
def atlas_graphs():
    """Every graph on at most 6 vertices, one per isomorphism class."""
    return [from_nx(H) for H in nx.graph_atlas_g() if H.number_of_nodes() <= 6]
