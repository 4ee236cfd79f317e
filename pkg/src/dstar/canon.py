"""Canonical labels: colour refinement with individualisation and backtracking.

The label is the graph6 string of the relabelled graph that is lexicographically
smallest among all leaves of the search tree, so two graphs share a label iff
they are isomorphic.
"""

from __future__ import annotations

import itertools

from .formats import to_graph6
from .graph import Graph, GraphError

BRUTE_FORCE_LIMIT = 8


def _refine(adj: tuple[frozenset[int], ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        colour = {}
        for i, cell in enumerate(cells):
            for v in cell:
                colour[v] = i
        out: list[list[int]] = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple(sorted(colour[w] for w in adj[v]))
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                split = True
            out.extend(groups[s] for s in sorted(groups))
        cells = out
        if not split:
            return cells


def _twin_key(adj: tuple[frozenset[int], ...], v: int) -> tuple[frozenset[int], frozenset[int]]:
    # swapping two open (or two closed) twins is an automorphism
    return adj[v], adj[v] | {v}


def canonical_labeling(g: Graph, colours: list[int] | None = None) -> list[int]:
    """Permutation ``perm`` with ``g.relabel(perm)`` equal for all isomorphic inputs.

    With ``colours``, only colour-preserving isomorphisms count and vertices
    are placed in increasing colour order.
    """
    n = g.n
    if n == 0:
        return []
    adj = g.adjacency
    best: list[object] = [None, None]

    def leaf(cells: list[list[int]]) -> None:
        order = [c[0] for c in cells]
        perm = [0] * n
        for pos, v in enumerate(order):
            perm[v] = pos
        code = to_graph6(g.relabel(perm))
        if best[0] is None or code < best[0]:
            best[0], best[1] = code, perm

    def search(cells: list[list[int]]) -> None:
        cells = _refine(adj, cells)
        if len(cells) == n:
            leaf(cells)
            return
        idx = min((i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: len(cells[i]))
        target = cells[idx]
        # branches on twins of an already-tried vertex are automorphic images
        tried_open: set[frozenset[int]] = set()
        tried_closed: set[frozenset[int]] = set()
        for v in target:
            op, cl = _twin_key(adj, v)
            if op in tried_open or cl in tried_closed:
                continue
            tried_open.add(op)
            tried_closed.add(cl)
            child = cells[:idx] + [[v], [w for w in target if w != v]] + cells[idx + 1 :]
            search(child)

    if colours is None:
        start = [list(range(n))]
    else:
        if len(colours) != n:
            raise GraphError("need one colour per vertex")
        start = [[v for v in range(n) if colours[v] == c] for c in sorted(set(colours))]
    search(start)
    return best[1]  # type: ignore[return-value]


def canonical_form(g: Graph, colours: list[int] | None = None) -> str:
    """Isomorphism-invariant label (graph6 text of the canonical relabelling).

    Coloured labels append the colour sequence in canonical vertex order.
    """
    perm = canonical_labeling(g, colours)
    code = to_graph6(g.relabel(perm))
    if colours is None:
        return code
    ordered = [0] * g.n
    for v, pos in enumerate(perm):
        ordered[pos] = colours[v]
    return code + ":" + ",".join(map(str, ordered))


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_labeling(g))


def canonical_form_bruteforce(g: Graph) -> str:
    """Minimum graph6 string over all ``n!`` relabellings; oracle for small graphs."""
    if g.n > BRUTE_FORCE_LIMIT:
        raise GraphError(f"brute-force canonical form limited to n <= {BRUTE_FORCE_LIMIT}")
    return min(to_graph6(g.relabel(list(p))) for p in itertools.permutations(range(g.n)))
