import random

import networkx as nx
import pytest

from dstar.canon import canonical_form
from dstar.graph import Graph
from dstar.search import enumerate_triangulations


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def edge_deleted_triangulation(rng: random.Random, n: int) -> Graph:
    """A uniformly chosen triangulation on n vertices with a random subset of edges removed."""
    t = rng.choice(enumerate_triangulations(n))
    edges = list(t.edges())
    keep = rng.uniform(0.4, 1.0)
    return Graph(n, [e for e in edges if rng.random() < keep])


def graph_classes(n: int) -> list[Graph]:
    """One representative per isomorphism class on n vertices, by edge augmentation."""
    level = {canonical_form(Graph(n)): Graph(n)}
    out = list(level.values())
    while level:
        nxt: dict[str, Graph] = {}
        for g in level.values():
            for u in range(n):
                for v in range(u + 1, n):
                    if not g.has_edge(u, v):
                        h = g.with_edges(add=[(u, v)])
                        nxt.setdefault(canonical_form(h), h)
        out += nxt.values()
        level = nxt
    return out


@pytest.fixture(scope="session")
def classes_upto_6():
    return {n: graph_classes(n) for n in range(1, 7)}


@pytest.fixture
def rng():
    return random.Random(20240611)
