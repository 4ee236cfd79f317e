"""Immutable simple graphs on vertices ``0..n-1`` and the doubled weight function."""

from __future__ import annotations

from collections.abc import Iterable, Iterator


class GraphError(ValueError):
    """Raised on misuse of the graph API (bad vertex, overlapping sets, ...)."""


Edge = tuple[int, int]


class Graph:
    """Simple undirected graph with dense vertex indices.

    Instances are immutable; every derived graph is a new value.
    """

    __slots__ = ("_n", "_adj", "_m")

    def __init__(self, n: int, edges: Iterable[Edge] = ()) -> None:
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            adj[u].add(v)
            adj[v].add(u)
        self._n = n
        self._adj = tuple(frozenset(a) for a in adj)
        self._m = sum(len(a) for a in adj) // 2

    @classmethod
    def from_adjacency(cls, adjacency: Iterable[Iterable[int]]) -> Graph:
        rows = [set(r) for r in adjacency]
        n = len(rows)
        for u, row in enumerate(rows):
            for v in row:
                if not 0 <= v < n:
                    raise GraphError(f"neighbor {v} of {u} out of range")
                if u not in rows[v]:
                    raise GraphError(f"adjacency not symmetric at ({u}, {v})")
        return cls(n, ((u, v) for u, row in enumerate(rows) for v in row if u < v))

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    def __len__(self) -> int:
        return self._n

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._m})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def _check(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise GraphError(f"vertex {v} out of range for n={self._n}")

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return self._adj[v]

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return self._adj

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self._adj[u]

    def edges(self) -> Iterator[Edge]:
        """Edges as ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u in range(self._n):
            for v in sorted(self._adj[u]):
                if u < v:
                    yield (u, v)

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    # derived graphs -----------------------------------------------------

    def with_edges(self, add: Iterable[Edge] = (), remove: Iterable[Edge] = ()) -> Graph:
        drop = {frozenset(e) for e in remove}
        for e in drop:
            u, v = tuple(e)
            if not self.has_edge(u, v):
                raise GraphError(f"cannot remove missing edge ({u}, {v})")
        kept = [e for e in self.edges() if frozenset(e) not in drop]
        return Graph(self._n, [*kept, *add])

    def add_vertices(self, k: int, edges: Iterable[Edge] = ()) -> Graph:
        return Graph(self._n + k, [*self.edges(), *edges])

    def relabel(self, perm: list[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self._n)):
            raise GraphError("relabeling must be a permutation of the vertices")
        return Graph(self._n, ((perm[u], perm[v]) for u, v in self.edges()))

    def disjoint_union(self, other: Graph) -> Graph:
        off = self._n
        return Graph(off + other.n, [*self.edges(), *((u + off, v + off) for u, v in other.edges())])


# ----------------------------------------------------------------------
# free functions mirroring the textbook notation


def degree(g: Graph, v: int) -> int:
    return len(g.neighbors(v))


def _as_set(g: Graph, s: Iterable[int]) -> frozenset[int]:
    out = frozenset(s)
    for v in out:
        g._check(v)
    return out


def edges_between(g: Graph, s: Iterable[int], t: Iterable[int]) -> int:
    """Number of edges with one end in ``s`` and the other in ``t``; the sets must be disjoint."""
    s, t = _as_set(g, s), _as_set(g, t)
    if s & t:
        raise GraphError(f"vertex sets overlap on {sorted(s & t)}")
    small, big = (s, t) if len(s) <= len(t) else (t, s)
    return sum(len(g.adjacency[v] & big) for v in small)


def weight2(g: Graph, s: Iterable[int]) -> int:
    """Twice the weight of ``G[s]``: internal edges count 2, boundary edges count 1.

    Equal to the degree sum over ``s``, which keeps everything in integers.
    """
    s = _as_set(g, s)
    if not s:
        raise GraphError("weight of an empty vertex set is undefined")
    return sum(len(g.adjacency[v]) for v in s)


def passes_bound(weight_2: int, size: int) -> bool:
    """``w <= 31/14 * size`` evaluated exactly as ``7 * (2w) <= 31 * size``."""
    return 7 * weight_2 <= 31 * size


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph plus the map ``new index -> original vertex`` (sorted order)."""
    verts = sorted(_as_set(g, s))
    if not verts:
        raise GraphError("induced subgraph of an empty set")
    index = {v: i for i, v in enumerate(verts)}
    edges = [(index[u], index[v]) for u in verts for v in g.adjacency[u] if v in index and u < v]
    return Graph(len(verts), edges), verts


# ----------------------------------------------------------------------
# small named graphs used throughout tests and examples


def complete_graph(n: int) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def empty_graph(n: int) -> Graph:
    return Graph(n)


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with the center at 0."""
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def wheel_graph(rim: int) -> Graph:
    """Hub 0 joined to a ``rim``-cycle on ``1..rim``."""
    spokes = [(0, i) for i in range(1, rim + 1)]
    cycle = [(i, i % rim + 1) for i in range(1, rim + 1)]
    return Graph(rim + 1, spokes + cycle)


def double_star(k: int, l: int) -> Graph:
    """``S_{k,l}``: edge 0-1, leaves ``2..k+1`` on 0 and ``k+2..k+l+1`` on 1."""
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(k)]
    edges += [(1, 2 + k + j) for j in range(l)]
    return Graph(k + l + 2, edges)


def icosahedron() -> Graph:
    edges = [
        (0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
        (1, 2), (2, 3), (3, 4), (4, 5), (5, 1),
        (1, 6), (2, 6), (2, 7), (3, 7), (3, 8), (4, 8), (4, 9), (5, 9), (5, 10), (1, 10),
        (6, 7), (7, 8), (8, 9), (9, 10), (10, 6),
        (11, 6), (11, 7), (11, 8), (11, 9), (11, 10),
    ]
    return Graph(12, edges)
