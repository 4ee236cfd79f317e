"""Finders for double stars, k-l edges, k-l-s paths, k-s⁻ stars and triangles on an edge."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .graph import Graph, GraphError


class PatternKind(enum.Enum):
    DOUBLE_STAR = "DoubleStar"
    KL_EDGE = "KLEdge"
    KLS_PATH = "KLSPath"
    KS_STAR = "KSStar"
    TRIANGLE_ON_EDGE = "TriangleOnEdge"


@dataclass(frozen=True)
class PatternMatch:
    """Witness for a structural pattern.

    ``leaf_vertices[:split]`` and ``leaf_vertices[split:]`` are the two leaf
    groups of a double star (leaves of ``centers[0]`` first).  Other kinds
    keep their non-center vertices in ``leaf_vertices`` with ``split`` unused.
    """

    kind: PatternKind
    centers: tuple[int, ...]
    leaf_vertices: tuple[int, ...] = ()
    split: int = 0
    params: tuple[int, ...] = field(default=())

    @property
    def leaves_a(self) -> tuple[int, ...]:
        return self.leaf_vertices[: self.split]

    @property
    def leaves_b(self) -> tuple[int, ...]:
        return self.leaf_vertices[self.split :]

    def vertices(self) -> tuple[int, ...]:
        return self.centers + self.leaf_vertices

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "centers": list(self.centers),
            "leaves": list(self.leaf_vertices),
            "split": self.split,
            "params": list(self.params),
        }


def _double_star_at(g: Graph, u: int, v: int, k: int, l: int) -> PatternMatch | None:
    nu = g.adjacency[u] - {v}
    nv = g.adjacency[v] - {u}
    if len(nu) < k or len(nv) < l or len(nu | nv) < k + l:
        return None
    shared = sorted(nu & nv)
    only_v = sorted(nv - nu)
    only_u = sorted(nu - nv)
    b = only_v[:l]
    b += shared[: l - len(b)]
    rest = [x for x in shared if x not in b]
    a = only_u[:k]
    a += rest[: k - len(a)]
    return PatternMatch(PatternKind.DOUBLE_STAR, (u, v), tuple(a + b), split=k, params=(k, l))


def contains_double_star(g: Graph, k: int = 2, l: int = 4) -> PatternMatch | None:
    """First ``S_{k,l}`` (as a subgraph, not necessarily induced) or None.

    At an edge ``uv`` the leaf sets exist iff ``|N(u)-v| >= k``,
    ``|N(v)-u| >= l`` and ``|N(u) ∪ N(v) - {u,v}| >= k + l`` (Hall's
    condition for the two-sided assignment).  Edges are scanned in
    lexicographic order, ``u`` taking the ``k`` side before ``v`` does.
    """
    if k < 1 or l < 1:
        raise GraphError("double star parameters must be positive")
    adj = g.adjacency
    lo, hi = min(k, l), max(k, l)
    for u, v in g.edges():
        du, dv = len(adj[u]) - 1, len(adj[v]) - 1
        if min(du, dv) < lo or max(du, dv) < hi:
            continue
        m = _double_star_at(g, u, v, k, l) or _double_star_at(g, v, u, k, l)
        if m is not None:
            return m
    return None


def is_free(g: Graph, k: int = 2, l: int = 4) -> bool:
    return contains_double_star(g, k, l) is None


def validate_match(g: Graph, m: PatternMatch) -> bool:
    """Re-check a witness against its defining conditions on ``g``."""
    adj = g.adjacency
    deg = g.degrees()
    if m.kind is PatternKind.DOUBLE_STAR:
        k, l = m.params
        u, v = m.centers
        a, b = set(m.leaves_a), set(m.leaves_b)
        return (
            u != v
            and v in adj[u]
            and len(a) == len(m.leaves_a) == k
            and len(b) == len(m.leaves_b) == l
            and not a & b
            and a <= adj[u] - {v}
            and b <= adj[v] - {u}
        )
    if m.kind is PatternKind.KL_EDGE:
        k, l = m.params
        u, v = m.centers
        return v in adj[u] and sorted((deg[u], deg[v])) == sorted((k, l))
    if m.kind is PatternKind.KLS_PATH:
        x, y, z = m.centers
        return (
            y in adj[x]
            and z in adj[y]
            and z not in adj[x]
            and x != z
            and (deg[x], deg[y], deg[z]) == tuple(m.params)
        )
    if m.kind is PatternKind.KS_STAR:
        k, s = m.params
        (c,) = m.centers
        return deg[c] == k and set(m.leaf_vertices) == adj[c] and all(deg[x] <= s for x in adj[c])
    if m.kind is PatternKind.TRIANGLE_ON_EDGE:
        u, v = m.centers
        return v in adj[u] and set(m.leaf_vertices) == adj[u] & adj[v]
    return False


def triangles_on_edge(g: Graph, u: int, v: int) -> int:
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    return len(g.adjacency[u] & g.adjacency[v])


def find_kl_edges(g: Graph, k: int, l: int) -> list[PatternMatch]:
    deg = g.degrees()
    want = sorted((k, l))
    return [
        PatternMatch(PatternKind.KL_EDGE, (u, v), params=(k, l))
        for u, v in g.edges()
        if sorted((deg[u], deg[v])) == want
    ]


def find_kls_paths(g: Graph, k: int, l: int, s: int) -> list[PatternMatch]:
    """Induced 3-vertex paths with degrees ``(k, l, s)`` in order; one entry per path."""
    deg = g.degrees()
    adj = g.adjacency
    out = []
    seen = set()
    for y in range(g.n):
        if deg[y] != l:
            continue
        nbrs = sorted(adj[y])
        for x in nbrs:
            for z in nbrs:
                if x == z or z in adj[x]:
                    continue
                if (deg[x], deg[z]) != (k, s):
                    continue
                key = (min(x, z), y, max(x, z))
                if key in seen:
                    continue
                seen.add(key)
                out.append(PatternMatch(PatternKind.KLS_PATH, (x, y, z), params=(k, l, s)))
    return out


def find_ks_star(g: Graph, k: int, s: int) -> PatternMatch | None:
    deg = g.degrees()
    for c in range(g.n):
        if deg[c] == k and all(deg[x] <= s for x in g.adjacency[c]):
            return PatternMatch(
                PatternKind.KS_STAR, (c,), tuple(sorted(g.adjacency[c])), params=(k, s)
            )
    return None
