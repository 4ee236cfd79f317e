"""Degree-≤2 peeling, the 31n/14 edge bound, and the end-to-end verdict."""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass

from .certify import (
    CertificationFailure,
    DecompositionCertificate,
    decompose,
    validate_certificate,
)
from .graph import Graph, induced_subgraph
from .patterns import PatternMatch, contains_double_star
from .planarity import is_planar

VERDICT_FORMAT = "dstar-verdict"
VERDICT_VERSION = 1


@dataclass(frozen=True)
class PeelResult:
    reduced: Graph
    removed_count: int
    removed_order: tuple[int, ...]
    index_map: tuple[int, ...]  # reduced vertex -> original vertex


def peel(g: Graph) -> PeelResult:
    """Delete a vertex of degree ≤ 2 (lowest index first), one at a time, until none is left."""
    deg = g.degrees()
    alive = [True] * g.n
    heap = [v for v in range(g.n) if deg[v] <= 2]
    heapq.heapify(heap)
    order: list[int] = []
    while heap:
        v = heapq.heappop(heap)
        if not alive[v] or deg[v] > 2:
            continue
        alive[v] = False
        order.append(v)
        for w in g.adjacency[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] <= 2:
                    heapq.heappush(heap, w)
    keep = [v for v in range(g.n) if alive[v]]
    if keep:
        reduced, index_map = induced_subgraph(g, keep)
    else:
        reduced, index_map = Graph(0), []
    return PeelResult(reduced, len(order), tuple(order), tuple(index_map))


def bound_check(n: int, e: int) -> bool:
    """``e <= 31n/14`` in integers."""
    if n < 0 or e < 0:
        raise ValueError("n and e must be nonnegative")
    return 14 * e <= 31 * n


def bound_status(n: int, e: int) -> str:
    """``tight`` (14e = 31n), ``ok`` or ``violated``."""
    if not bound_check(n, e):
        return "violated"
    return "tight" if 14 * e == 31 * n and n > 0 else "ok"


@dataclass
class Verdict:
    is_planar: bool
    is_free: bool
    n: int
    e: int
    peeled_size: int | None
    certificate: DecompositionCertificate | None
    empty_after_peel: bool
    bound_holds: bool
    witness: PatternMatch | None = None
    certificate_violations: tuple[str, ...] = ()
    failure: str | None = None

    @property
    def global_ok(self) -> bool:
        if self.certificate is None:
            return self.empty_after_peel
        return self.certificate.global_ok and not self.certificate_violations

    def to_dict(self) -> dict:
        return {
            "format": VERDICT_FORMAT,
            "version": VERDICT_VERSION,
            "is_planar": self.is_planar,
            "is_free": self.is_free,
            "peeled_size": self.peeled_size,
            "certificate": "empty-graph" if self.empty_after_peel else (
                self.certificate.to_dict() if self.certificate else None
            ),
            "bound_holds": self.bound_holds,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def check_bound_pipeline(g: Graph) -> Verdict:
    """Planarity and freeness checks, peeling, then certification of the core.

    The certificate is expressed in original vertex numbers.
    """
    planar = is_planar(g)
    witness = contains_double_star(g, 2, 4)
    holds = bound_check(g.n, g.m)
    if not planar or witness is not None:
        return Verdict(planar, witness is None, g.n, g.m, None, None, False, holds, witness)
    pr = peel(g)
    if pr.reduced.n == 0:
        return Verdict(True, True, g.n, g.m, 0, None, True, holds)
    try:
        core_cert = decompose(pr.reduced)
    except CertificationFailure as exc:
        return Verdict(True, True, g.n, g.m, pr.reduced.n, None, False, holds, failure=str(exc))
    violations = tuple(validate_certificate(pr.reduced, core_cert).violations)
    cert = _lift(core_cert, pr.index_map)
    return Verdict(True, True, g.n, g.m, pr.reduced.n, cert, False, holds, None, violations)


def _lift(cert: DecompositionCertificate, index_map: tuple[int, ...]) -> DecompositionCertificate:
    from .certify import Part

    parts = [
        Part(p.kind, tuple(sorted(index_map[v] for v in p.vertices)), p.weight2, p.passes)
        for p in cert.parts
    ]
    return DecompositionCertificate(parts, cert.global_ok, cert.graph_hash, cert.n, cert.m)
