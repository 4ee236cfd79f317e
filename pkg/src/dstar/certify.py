"""Vertex-partition certificates for S_{2,4}-free planar graphs with minimum degree 3.

``decompose`` splits the vertex set into parts built around degree-6 and
degree-5 vertices and one residual part of degree-≤4 vertices, and records
each part's doubled weight.  ``validate_certificate`` re-checks a certificate
from scratch and never trusts the stored numbers.
"""

from __future__ import annotations

import enum
import hashlib
import json
from dataclasses import dataclass, field

from .formats import to_graph6
from .graph import Graph, GraphError, passes_bound, weight2
from .patterns import PatternKind, PatternMatch, contains_double_star, validate_match
from .planarity import is_planar

CERT_FORMAT = "dstar-certificate"
CERT_VERSION = 1


class PartKind(enum.Enum):
    DEG6_COMPONENT = "Deg6Component"
    FIVE_FIVE_BLOCK = "FiveFiveBlock"
    EXPANSION_545 = "Expansion545"
    EXPANSION_535 = "Expansion535"
    FIVE_FOUR_MINUS_STAR = "FiveFourMinusStar"
    RESIDUAL = "Residual"


class LemmaHypothesisError(GraphError):
    """Input violates planarity, S_{2,4}-freeness or minimum degree 3."""

    def __init__(self, hypothesis: str, detail: str = "", witness: PatternMatch | None = None):
        self.hypothesis = hypothesis
        self.witness = witness
        super().__init__(f"{hypothesis}: {detail}" if detail else hypothesis)


class CertificationFailure(RuntimeError):
    """A degree-5 vertex fits none of the decomposition rules."""

    def __init__(self, vertex: int, reason: str):
        self.vertex = vertex
        super().__init__(f"vertex {vertex}: {reason}")


@dataclass(frozen=True)
class Part:
    kind: PartKind
    vertices: tuple[int, ...]
    weight2: int
    passes: bool

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "vertices": list(self.vertices),
            "weight2": self.weight2,
            "passes": self.passes,
        }


@dataclass
class DecompositionCertificate:
    parts: list[Part]
    global_ok: bool
    graph_hash: str = ""
    n: int = 0
    m: int = 0

    @property
    def total_weight2(self) -> int:
        return sum(p.weight2 for p in self.parts)

    def to_dict(self) -> dict:
        return {
            "format": CERT_FORMAT,
            "version": CERT_VERSION,
            "graph_hash": self.graph_hash,
            "n": self.n,
            "m": self.m,
            "parts": [p.to_dict() for p in self.parts],
            "global_ok": self.global_ok,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data: dict) -> DecompositionCertificate:
        if data.get("format") != CERT_FORMAT or data.get("version") != CERT_VERSION:
            raise ValueError("not a version-1 decomposition certificate")
        parts = [
            Part(PartKind(p["kind"]), tuple(p["vertices"]), int(p["weight2"]), bool(p["passes"]))
            for p in data["parts"]
        ]
        return cls(parts, bool(data["global_ok"]), data.get("graph_hash", ""), data.get("n", 0), data.get("m", 0))

    def table(self) -> str:
        rows = ["#\tkind\tsize\tweight2\t7*w2<=31*size"]
        for i, p in enumerate(self.parts):
            rows.append(f"{i}\t{p.kind.value}\t{len(p.vertices)}\t{p.weight2}\t{'pass' if p.passes else 'FAIL'}")
        return "\n".join(rows)


def graph_hash(g: Graph) -> str:
    return "sha256:" + hashlib.sha256(to_graph6(g).encode()).hexdigest()


# ----------------------------------------------------------------------
# part builders


def closed_neighbourhood(g: Graph, v: int) -> set[int]:
    return set(g.adjacency[v]) | {v}


def five_five_block(g: Graph, u: int, v: int) -> set[int]:
    """``N[u] ∪ N[v]`` plus every outside degree-3 vertex with ≥ 2 neighbours inside, to fixpoint."""
    adj = g.adjacency
    block = closed_neighbourhood(g, u) | closed_neighbourhood(g, v)
    grew = True
    while grew:
        grew = False
        for x in sorted({y for b in block for y in adj[b]} - block):
            if len(adj[x]) == 3 and len(adj[x] & block) >= 2:
                block.add(x)
                grew = True
                break
    return block


def expansion_steps(g: Graph, seed: PatternMatch) -> tuple[set[int], list[int]]:
    """Fixpoint set of a 5-4-5 / 5-3-5 path and the degree-5 vertices absorbed, in order."""
    if seed.kind is not PatternKind.KLS_PATH or tuple(seed.params) not in ((5, 4, 5), (5, 3, 5)):
        raise GraphError("maximal expansion needs a 5-4-5 or 5-3-5 path seed")
    if not validate_match(g, seed):
        raise GraphError(f"seed {seed.centers} is not a valid path in this graph")
    adj = g.adjacency
    x, _, z = seed.centers
    block = closed_neighbourhood(g, x) | closed_neighbourhood(g, z)
    absorbed: list[int] = []
    while True:
        frontier = sorted(t for t in {y for b in block for y in adj[b]} - block if len(adj[t]) == 5)
        if not frontier:
            return block, absorbed
        absorbed.append(frontier[0])
        block |= closed_neighbourhood(g, frontier[0])


def maximal_expansion(g: Graph, seed: PatternMatch) -> set[int]:
    """Grow a 5-4-5 / 5-3-5 path by absorbing adjacent degree-5 vertices with their neighbourhoods."""
    return expansion_steps(g, seed)[0]


def _path_seed(g: Graph, u: int, middle_degree: int) -> PatternMatch | None:
    adj = g.adjacency
    for w in sorted(adj[u]):
        if len(adj[w]) != middle_degree:
            continue
        for v in sorted(adj[w]):
            if v != u and len(adj[v]) == 5 and v not in adj[u]:
                return PatternMatch(PatternKind.KLS_PATH, (u, w, v), params=(5, middle_degree, 5))
    return None


# ----------------------------------------------------------------------


def check_hypotheses(g: Graph) -> None:
    if not is_planar(g):
        raise LemmaHypothesisError("planarity", "graph is not planar")
    witness = contains_double_star(g, 2, 4)
    if witness is not None:
        raise LemmaHypothesisError("S24-free", f"S_2,4 on edge {witness.centers}", witness)
    if g.n == 0 or g.min_degree() < 3:
        raise LemmaHypothesisError("min-degree", f"minimum degree {g.min_degree()} < 3")


def decompose(g: Graph) -> DecompositionCertificate:
    """Partition ``V(g)`` following the degree-6 / 5-5 / 5-x-5 / 5-4⁻ rules.

    Degree-5 vertices are handled lowest index first.  A rule's vertex set is
    intersected with the still-unassigned vertices, so parts are disjoint by
    construction; whether each part meets its weight bound is recorded, not
    assumed.
    """
    check_hypotheses(g)
    adj = g.adjacency
    deg = g.degrees()
    assigned: set[int] = set()
    parts: list[Part] = []

    def emit(kind: PartKind, verts: set[int]) -> None:
        verts = verts - assigned
        if not verts:
            return
        assigned.update(verts)
        w2 = weight2(g, verts)
        parts.append(Part(kind, tuple(sorted(verts)), w2, passes_bound(w2, len(verts))))

    for u in range(g.n):
        if deg[u] == 6 and u not in assigned:
            emit(PartKind.DEG6_COMPONENT, closed_neighbourhood(g, u))

    while True:
        pending = [u for u in range(g.n) if deg[u] == 5 and u not in assigned]
        if not pending:
            break
        u = pending[0]
        fives = [v for v in sorted(adj[u]) if deg[v] == 5]
        if fives:
            emit(PartKind.FIVE_FIVE_BLOCK, five_five_block(g, u, fives[0]))
            continue
        seed = _path_seed(g, u, 4)
        if seed is not None:
            emit(PartKind.EXPANSION_545, maximal_expansion(g, seed))
            continue
        seed = _path_seed(g, u, 3)
        if seed is not None:
            emit(PartKind.EXPANSION_535, maximal_expansion(g, seed))
            continue
        if all(deg[x] <= 4 for x in adj[u]):
            emit(PartKind.FIVE_FOUR_MINUS_STAR, closed_neighbourhood(g, u))
            continue
        raise CertificationFailure(u, "no 5-5 edge, 5-4-5 / 5-3-5 path or 5-4⁻ star")

    rest = set(range(g.n)) - assigned
    if rest:
        emit(PartKind.RESIDUAL, rest)
    return DecompositionCertificate(
        parts, all(p.passes for p in parts), graph_hash(g), g.n, g.m
    )


# ----------------------------------------------------------------------
# independent validation


@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, check: str, detail: str) -> None:
        self.violations.append(f"{check}: {detail}")


def validate_certificate(g: Graph, cert: DecompositionCertificate) -> ValidationReport:
    report = ValidationReport()
    adj = g.adjacency
    deg = g.degrees()
    owner: dict[int, int] = {}
    for i, part in enumerate(cert.parts):
        if not part.vertices:
            report.add("nonempty", f"part {i} is empty")
            continue
        for v in part.vertices:
            if not 0 <= v < g.n:
                report.add("range", f"vertex {v} in part {i} is not in the graph")
            elif v in owner:
                report.add("disjointness", f"vertex {v} in parts {owner[v]} and {i}")
            else:
                owner[v] = i
    missing = sorted(set(range(g.n)) - owner.keys())
    if missing:
        report.add("coverage", f"vertices {missing} belong to no part")

    total = 0
    for i, part in enumerate(cert.parts):
        verts = {v for v in part.vertices if 0 <= v < g.n}
        if not verts:
            continue
        w2 = sum(deg[v] for v in verts)
        total += w2
        if w2 != part.weight2:
            report.add("weight recomputation", f"part {i} stores {part.weight2}, actual {w2}")
        ok = passes_bound(w2, len(verts))
        if not ok:
            report.add("bound", f"part {i}: 7*{w2} > 31*{len(verts)}")
        if part.passes != ok:
            report.add("passes flag", f"part {i} flag {part.passes} but bound gives {ok}")
        _check_kind(report, i, part, verts, adj, deg, len(cert.parts))

    if total != 2 * g.m:
        report.add("global identity", f"sum of weight2 {total} != 2e = {2 * g.m}")
    residuals = sum(p.kind is PartKind.RESIDUAL for p in cert.parts)
    if residuals > 1:
        report.add("residual position", f"{residuals} residual parts, at most one allowed")
    expected = all(p.passes for p in cert.parts)
    if cert.global_ok != expected:
        report.add("global_ok", f"stored {cert.global_ok}, recomputed {expected}")
    return report


def _check_kind(report, i, part, verts, adj, deg, nparts) -> None:
    kind = part.kind
    if kind is PartKind.RESIDUAL:
        if i != nparts - 1:
            report.add("residual position", f"residual part {i} is not last")
        high = sorted(v for v in verts if deg[v] > 4)
        if high:
            report.add("degree conditions", f"residual part {i} holds vertices {high} of degree > 4")
    elif kind is PartKind.DEG6_COMPONENT:
        if len(verts) != 7 or not any(deg[v] == 6 for v in verts):
            report.add("degree conditions", f"part {i} is not a 7-vertex degree-6 neighbourhood")
        if any(adj[v] - verts for v in verts):
            report.add("degree conditions", f"part {i} is not a connected component")
    elif kind is PartKind.FIVE_FOUR_MINUS_STAR:
        centers = [c for c in verts if deg[c] == 5 and verts <= adj[c] | {c}]
        if not any(all(deg[x] <= 4 for x in adj[c]) for c in centers):
            report.add("degree conditions", f"part {i} has no degree-5 centre with degree-≤4 neighbours")
    elif not any(deg[v] == 5 for v in verts):
        report.add("degree conditions", f"part {i} ({kind.value}) holds no degree-5 vertex")
