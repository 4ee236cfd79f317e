"""Exact small-n machinery: triangulation enumeration, a brute-force subgraph
oracle, and the planar Turán search for double stars.

Every planar graph on ``n >= 3`` vertices is a spanning subgraph of some
triangulation, so ex_P(n, S_{k,l}) is found by deleting as few edges as
possible from each triangulation.  Deletions branch on the edges of a found
double star (one of them must go), with earlier siblings forced to stay so
each deletion set is visited once.
"""

from __future__ import annotations

import itertools
import json
import logging
import os
import time
from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from .canon import canonical_form, canonical_form_bruteforce
from .formats import from_graph6, to_graph6
from .graph import Graph, GraphError, complete_graph, double_star
from .patterns import contains_double_star
from .planarity import is_planar

log = logging.getLogger(__name__)

MAX_N = 10
ORACLE_LIMIT = 10
CHECKPOINT_FORMAT = "dstar-search-checkpoint"
CHECKPOINT_VERSION = 1

# plane triangulations on n = 4..10 vertices up to isomorphism
TRIANGULATION_COUNTS = {4: 1, 5: 1, 6: 2, 7: 5, 8: 14, 9: 50, 10: 233}

__all__ = [
    "CapacityError",
    "SearchResult",
    "brute_force_contains",
    "canonical_form",
    "canonical_form_bruteforce",
    "enumerate_triangulations",
    "max_edges_exact",
]


class CapacityError(GraphError):
    """Input beyond what the exhaustive machinery is meant to handle."""


# ----------------------------------------------------------------------
# brute-force subgraph oracle


def brute_force_contains(g: Graph, pattern: Graph) -> bool:
    """True iff ``pattern`` is a (not necessarily induced) subgraph of ``g``."""
    p = pattern.n
    if p > ORACLE_LIMIT:
        raise CapacityError(f"pattern has {p} vertices; oracle handles at most {ORACLE_LIMIT}")
    if p == 0:
        return True
    if p > g.n or pattern.m > g.m:
        return False
    padj, gadj = pattern.adjacency, g.adjacency
    pdeg, gdeg = pattern.degrees(), g.degrees()

    # connected-first order, highest degree first
    order: list[int] = []
    placed: set[int] = set()
    while len(order) < p:
        rest = [v for v in range(p) if v not in placed]
        v = max(rest, key=lambda x: (len(padj[x] & placed), pdeg[x], -x))
        order.append(v)
        placed.add(v)
    back = [[order.index(w) for w in padj[v] if order.index(w) < i] for i, v in enumerate(order)]

    image = [-1] * p
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == p:
            return True
        v = order[i]
        if back[i]:
            cands = set(gadj[image[back[i][0]]])
            for j in back[i][1:]:
                cands &= gadj[image[j]]
        else:
            cands = set(range(g.n))
        for x in sorted(cands - used):
            if gdeg[x] < pdeg[v]:
                continue
            image[i] = x
            used.add(x)
            if extend(i + 1):
                return True
            used.discard(x)
        image[i] = -1
        return False

    return extend(0)


# ----------------------------------------------------------------------
# triangulations


def _insertions(t: Graph) -> Iterable[Graph]:
    """Candidate graphs obtained by adding a vertex of degree 3, 4 or 5.

    The new vertex is joined to a cycle ``C`` of ``t`` after deleting the
    ``|C| - 3`` chords that triangulated ``C``'s interior.  Not every candidate
    is planar; callers filter.
    """
    adj = t.adjacency
    x = t.n
    for a, b, c in itertools.combinations(range(t.n), 3):
        if b in adj[a] and c in adj[a] and c in adj[b]:
            yield t.add_vertices(1, [(x, a), (x, b), (x, c)])
    for a, b in t.edges():
        for c, d in itertools.combinations(sorted(adj[a] & adj[b]), 2):
            yield t.with_edges(remove=[(a, b)]).add_vertices(1, [(x, a), (x, b), (x, c), (x, d)])
    for a in range(t.n):
        for c, d in itertools.permutations(sorted(adj[a]), 2):
            if d not in adj[c]:
                continue
            for b in sorted(adj[a] & adj[c]):
                for e in sorted(adj[a] & adj[d]):
                    if len({a, b, c, d, e}) < 5:
                        continue
                    base = t.with_edges(remove=[(a, c), (a, d)])
                    yield base.add_vertices(1, [(x, a), (x, b), (x, c), (x, d), (x, e)])


@lru_cache(maxsize=None)
def _triangulations_g6(n: int) -> tuple[str, ...]:
    if n == 4:
        return (canonical_form(complete_graph(4)),)
    found: dict[str, Graph] = {}
    for code in _triangulations_g6(n - 1):
        t = from_graph6(code)
        for cand in _insertions(t):
            if cand.min_degree() < 3 or not is_planar(cand):
                continue
            key = canonical_form(cand)
            found.setdefault(key, cand)
    return tuple(sorted(found))


def enumerate_triangulations(n: int) -> list[Graph]:
    """All maximal planar graphs on ``n`` vertices up to isomorphism, canonically labelled.

    Every triangulation has a vertex of degree 3, 4 or 5; deleting it and
    re-triangulating the hole gives a smaller triangulation, so reversing that
    step from every ``(n-1)``-vertex triangulation reaches them all.
    """
    if not 4 <= n <= MAX_N:
        raise CapacityError(f"triangulation enumeration supports 4 <= n <= {MAX_N}, got {n}")
    out = [from_graph6(c) for c in _triangulations_g6(n)]
    if len(out) != TRIANGULATION_COUNTS[n]:
        raise AssertionError(
            f"generated {len(out)} triangulations on {n} vertices, expected {TRIANGULATION_COUNTS[n]}"
        )
    return out


def _roots(n: int) -> list[Graph]:
    if n <= 4:
        return [complete_graph(n)]
    return enumerate_triangulations(n)


# ----------------------------------------------------------------------
# branch and bound


@dataclass
class SearchResult:
    n: int
    max_edges: int
    witnesses: list[Graph]
    nodes_explored: int
    elapsed: float
    k: int = 2
    l: int = 4
    audited: int = 0
    disagreements: int = 0

    @property
    def witness_codes(self) -> list[str]:
        return [to_graph6(w) for w in self.witnesses]

    def table_row(self) -> str:
        return f"{self.n}\t{self.max_edges}\t{len(self.witnesses)}"


@dataclass
class _Stats:
    nodes: int = 0
    audited: int = 0
    disagreements: int = 0


def _star_edges(match) -> list[tuple[int, int]]:
    u, v = match.centers
    edges = [(u, v)] + [(u, a) for a in match.leaves_a] + [(v, b) for b in match.leaves_b]
    return [(min(e), max(e)) for e in edges]


def _deletion_sets(
    root: Graph, k: int, l: int, budget: int, stats: _Stats, audit: Callable[[Graph], bool] | None
) -> list[frozenset[tuple[int, int]]]:
    """All deletion sets of size exactly ``budget`` that leave ``root`` S_{k,l}-free."""
    hits: list[frozenset[tuple[int, int]]] = []
    pattern = double_star(k, l)

    def visit(removed: list[tuple[int, int]], keep: frozenset[tuple[int, int]]) -> None:
        stats.nodes += 1
        g = root.with_edges(remove=removed) if removed else root
        match = contains_double_star(g, k, l)
        if audit is not None and audit(g):
            stats.audited += 1
            if (match is not None) != brute_force_contains(g, pattern):
                stats.disagreements += 1
        if match is None:
            if len(removed) == budget:
                hits.append(frozenset(removed))
            return
        # current_edges - removable_remaining < target: prune
        if len(removed) >= budget:
            return
        forced = set(keep)
        for e in _star_edges(match):
            if e in forced:
                continue
            visit(removed + [e], frozenset(forced))
            forced.add(e)

    visit([], frozenset())
    return hits


def _solve_root(args) -> tuple[list[str], int, int, int]:
    code, k, l, budget, audit_every = args
    root = from_graph6(code)
    stats = _Stats()
    counter = itertools.count()
    audit = (lambda g: next(counter) % audit_every == 0) if audit_every else None
    sets = _deletion_sets(root, k, l, budget, stats, audit)
    forms = sorted({canonical_form(root.with_edges(remove=s)) for s in sets})
    return forms, stats.nodes, stats.audited, stats.disagreements


def _load_checkpoint(path: Path, n: int, k: int, l: int) -> dict:
    data = json.loads(path.read_text())
    if data.get("format") != CHECKPOINT_FORMAT or data.get("version") != CHECKPOINT_VERSION:
        raise ValueError(f"{path} is not a version-{CHECKPOINT_VERSION} search checkpoint")
    if (data["n"], data["k"], data["l"]) != (n, k, l):
        raise ValueError(f"checkpoint is for n={data['n']} S_{{{data['k']},{data['l']}}}")
    return data


def _save_checkpoint(path: Path, state: dict) -> None:
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(json.dumps(state, indent=1, sort_keys=True))
    os.replace(tmp, path)


def max_edges_exact(
    n: int,
    k: int = 2,
    l: int = 4,
    *,
    jobs: int = 1,
    checkpoint: str | Path | None = None,
    audit_every: int = 0,
) -> SearchResult:
    """ex_P(n, S_{k,l}) with all extremal graphs up to isomorphism.

    Deletion budgets are tried in increasing order; the first budget at which
    some triangulation becomes S_{k,l}-free gives the answer.  Only the
    trivial bound ``3n - 6`` is used; ``31n/14`` is never a pruning input.
    ``audit_every=j`` re-checks every j-th visited graph with the brute-force
    oracle and reports the disagreement count.
    """
    if n < 1:
        raise GraphError("n must be positive")
    if n > MAX_N:
        raise CapacityError(f"exact search supports n <= {MAX_N}, got {n}")
    start = time.perf_counter()
    roots = [to_graph6(r) for r in _roots(n)]
    ckpt = Path(checkpoint) if checkpoint else None
    state = {
        "format": CHECKPOINT_FORMAT,
        "version": CHECKPOINT_VERSION,
        "n": n,
        "k": k,
        "l": l,
        "budget": 0,
        "completed": {},
        "nodes": 0,
        "audited": 0,
        "disagreements": 0,
    }
    if ckpt is not None and ckpt.exists():
        state = _load_checkpoint(ckpt, n, k, l)
        log.info("resuming n=%d at budget %d with %d roots done", n, state["budget"], len(state["completed"]))

    max_m = from_graph6(roots[0]).m
    while True:
        budget = state["budget"]
        if budget > max_m:
            raise AssertionError("no S_{k,l}-free subgraph found; the empty graph always qualifies")
        todo = [i for i in range(len(roots)) if str(i) not in state["completed"]]
        tasks = [(roots[i], k, l, budget, audit_every) for i in todo]
        if jobs > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = pool.map(_solve_root, tasks, chunksize=1)
                for i, res in zip(todo, results):
                    _record(state, i, res, ckpt)
        else:
            for i, task in zip(todo, tasks):
                _record(state, i, _solve_root(task), ckpt)
        forms = sorted({f for fs in state["completed"].values() for f in fs})
        if forms:
            break
        state["budget"] = budget + 1
        state["completed"] = {}
        if ckpt is not None:
            _save_checkpoint(ckpt, state)

    witnesses = [from_graph6(f) for f in forms]
    return SearchResult(
        n=n,
        max_edges=max_m - state["budget"],
        witnesses=witnesses,
        nodes_explored=state["nodes"],
        elapsed=time.perf_counter() - start,
        k=k,
        l=l,
        audited=state["audited"],
        disagreements=state["disagreements"],
    )


def _record(state: dict, i: int, res: tuple[list[str], int, int, int], ckpt: Path | None) -> None:
    forms, nodes, audited, disagreements = res
    state["completed"][str(i)] = forms
    state["nodes"] += nodes
    state["audited"] += audited
    state["disagreements"] += disagreements
    if ckpt is not None:
        _save_checkpoint(ckpt, state)
