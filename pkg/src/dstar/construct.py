"""Building blocks and tree-shaped extremal graphs.

Blocks are found by exhaustive search around a 5-5 edge ``uv`` (vertices 0
and 1 during the search) with 3 or 4 common neighbours and every other degree
in {3, 4, 5}.  A block is an induced piece of an extremal graph, so it also
carries *stubs*: edges that leave the block.  A stub is modelled as a pendant
edge while searching; in every assembly built here the stubs become bridges
between blocks, and each assembly is re-verified anyway.

The search is slow-ish (seconds to minutes), so its output is frozen in
``data/blocks.json`` and ``load_block_library`` reads that file.  A test
re-runs the search and compares.
"""

from __future__ import annotations

import enum
import itertools
import json
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources

from .canon import canonical_form, canonical_labeling
from .graph import Graph, GraphError
from .patterns import contains_double_star
from .planarity import is_planar

SEARCH_VERSION = 1
FIXTURE = "blocks.json"


class BlockKind(enum.Enum):
    H_STAR_LEAF = "HStarLeaf"
    H_SHARP = "HSharp"  # one half of an HSharpPair
    H_SHARP_PAIR = "HSharpPair"
    EIGHT_BLOCK = "EightBlock"


# (vertices, internal edges, stubs) per searched kind; doubled weight = 2e + stubs
SIGNATURES = {
    BlockKind.H_STAR_LEAF: (7, 15, 1),
    BlockKind.H_SHARP: (7, 14, 3),
    BlockKind.EIGHT_BLOCK: (8, 16, 2),
}


class ConstructionError(GraphError):
    """A block, splice or tree shape could not be realised."""


class DerivationFailure(ConstructionError):
    pass


@dataclass(frozen=True)
class BlockTemplate:
    kind: BlockKind
    n: int
    edges: tuple[tuple[int, int], ...]
    attachments: tuple[int, ...]  # one entry per outgoing edge; may repeat a vertex
    derivation: dict = field(default_factory=dict, compare=False, hash=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def weight2(self) -> int:
        return 2 * self.m + len(self.attachments)

    def graph(self) -> Graph:
        return Graph(self.n, self.edges)

    def with_pendants(self) -> Graph:
        return _with_pendants(self.graph(), self.attachments)

    def key(self) -> str:
        return _coloured_key(self.graph(), self.attachments)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "n": self.n,
            "edges": [list(e) for e in self.edges],
            "attachments": list(self.attachments),
            "derivation": self.derivation,
        }

    @classmethod
    def from_dict(cls, d: dict) -> BlockTemplate:
        return cls(
            BlockKind(d["kind"]),
            int(d["n"]),
            tuple((int(a), int(b)) for a, b in d["edges"]),
            tuple(int(a) for a in d["attachments"]),
            dict(d.get("derivation", {})),
        )


def _with_pendants(g: Graph, stubs) -> Graph:
    return g.add_vertices(len(stubs), [(s, g.n + i) for i, s in enumerate(stubs)])


def _coloured_key(g: Graph, stubs) -> str:
    c = Counter(stubs)
    return canonical_form(g, [c[v] for v in range(g.n)])


def _canonical_template(kind: BlockKind, g: Graph, stubs, derivation: dict) -> BlockTemplate:
    c = Counter(stubs)
    perm = canonical_labeling(g, [c[v] for v in range(g.n)])
    h = g.relabel(perm)
    return BlockTemplate(kind, h.n, tuple(h.edges()), tuple(sorted(perm[s] for s in stubs)), derivation)


# ----------------------------------------------------------------------
# derivation


def _cores(n: int, m: int, commons=(4, 3)):
    """Planar S_{2,4}-free graphs with N(0) = {1,2,3,4,5} and N(1) fixed by the common count.

    Up to relabelling, N(0) - 1 = {2,3,4,5} and N(1) - 0 is {2,3,4,5} (four
    common neighbours) or {2,3,4,6} (three), so only the edges among 2..n-1 vary.
    """
    for common in commons:
        if common == 3 and n < 7:
            continue
        nv = (2, 3, 4, 5) if common == 4 else (2, 3, 4, 6)
        base = [(0, 1)] + [(0, a) for a in (2, 3, 4, 5)] + [(1, a) for a in nv]
        free = list(itertools.combinations(range(2, n), 2))
        for extra in itertools.combinations(free, m - len(base)):
            g = Graph(n, base + list(extra))
            if min(g.degrees()) == 0:
                continue
            if contains_double_star(g) is None and is_planar(g):
                yield common, g


def _stub_sets(g: Graph, count: int):
    deg = g.degrees()
    for stubs in itertools.combinations_with_replacement(range(2, g.n), count):
        c = Counter(stubs)
        if any(not 3 <= deg[x] + c[x] <= 5 for x in range(2, g.n)):
            continue
        if contains_double_star(_with_pendants(g, stubs)) is None:
            yield stubs


def _search_kind(kind: BlockKind) -> list[tuple[int, Graph, tuple[int, ...]]]:
    n, m, s = SIGNATURES[kind]
    seen: dict[str, tuple[int, Graph, tuple[int, ...]]] = {}
    for common, g in _cores(n, m):
        for stubs in _stub_sets(g, s):
            seen.setdefault(_coloured_key(g, stubs), (common, g, stubs))
    return [seen[k] for k in sorted(seen)]


def _constraints(kind: BlockKind, common: int) -> dict:
    n, m, s = SIGNATURES[kind]
    return {
        "vertices": n,
        "internal_edges": m,
        "stubs": s,
        "search_frame": "u=0, v=1, N(u)-v={2,3,4,5}",
        "common_neighbours": common,
        "degrees": [3, 4, 5],
        "planar": True,
        "pendant_stub_free": True,
    }


def _pair_builds(half: BlockTemplate, star: BlockTemplate):
    """14-vertex candidates with two open stubs, as ``(composition, graph, attachments)``.

    ``two-halves``: two copies of ``half`` joined by two stub-to-stub edges.
    ``half-plus-leaf``: ``half`` with an HStarLeaf hanging from one stub.
    """
    a = half.attachments
    doubled = list(half.edges) + [(x + half.n, y + half.n) for x, y in half.edges]
    for keep_a, keep_b in itertools.product(range(3), repeat=2):
        rest_a = [a[i] for i in range(3) if i != keep_a]
        rest_b = [a[i] + half.n for i in range(3) if i != keep_b]
        for order in (rest_b, rest_b[::-1]):
            joins = list(zip(rest_a, order))
            if len(set(joins)) == 2:
                yield "two-halves", Graph(2 * half.n, doubled + joins), (a[keep_a], a[keep_b] + half.n)
    leaf_edges = [(x + half.n, y + half.n) for x, y in star.edges]
    for i in range(3):
        rest = tuple(a[j] for j in range(3) if j != i)
        g = Graph(half.n + star.n, list(half.edges) + leaf_edges + [(a[i], star.attachments[0] + half.n)])
        yield "half-plus-leaf", g, rest


def _pair_candidates(half: BlockTemplate, star: BlockTemplate, base: Graph, cut):
    found: dict[str, tuple[str, Graph, tuple[int, int]]] = {}
    rejected: Counter = Counter()
    for comp, g, atts in _pair_builds(half, star):
        if not is_planar(g) or contains_double_star(_with_pendants(g, atts)) is not None:
            rejected[comp] += 1
            continue
        key = _coloured_key(g, atts)
        if key in found:
            continue
        tpl = BlockTemplate(BlockKind.H_SHARP_PAIR, g.n, tuple(g.edges()), atts)
        if _try_splice(base, cut, tpl) is None:
            rejected[comp] += 1
            continue
        found[key] = (comp, g, atts)
    return list(found.values()), rejected


def derive_block_library() -> list[BlockTemplate]:
    """Exhaustive derivation of every block kind; raises if any kind comes out empty."""
    library: list[BlockTemplate] = []

    stars = []
    for common, g, stubs in _search_kind(BlockKind.H_STAR_LEAF):
        t = _canonical_template(BlockKind.H_STAR_LEAF, g, stubs, _derivation(BlockKind.H_STAR_LEAF, common))
        try:
            assemble_pair(t)
        except ConstructionError:
            continue
        stars.append(t)
    if not stars:
        raise DerivationFailure("no HStarLeaf template")
    library += stars
    base, cut = _pair_graph(stars[0])

    halves = [
        _canonical_template(BlockKind.H_SHARP, g, stubs, _derivation(BlockKind.H_SHARP, common))
        for common, g, stubs in _search_kind(BlockKind.H_SHARP)
    ]
    pairs = []
    used = []
    for i, half in enumerate(halves):
        found, rejected = _pair_candidates(half, stars[0], base, cut)
        if found:
            used.append(half)
        for comp, g, atts in found:
            d = {
                "constraints": {
                    "composition": comp,
                    "half_index": len(used) - 1,
                    "rejected_candidates": dict(sorted(rejected.items())),
                },
                "search_version": SEARCH_VERSION,
            }
            pairs.append(_canonical_template(BlockKind.H_SHARP_PAIR, g, atts, d))
    if not pairs:
        raise DerivationFailure("no HSharpPair template")
    library += used
    library += sorted(pairs, key=lambda t: (t.derivation["constraints"]["composition"] != "two-halves", t.key()))

    eights = []
    for common, g, stubs in _search_kind(BlockKind.EIGHT_BLOCK):
        t = _canonical_template(BlockKind.EIGHT_BLOCK, g, stubs, _derivation(BlockKind.EIGHT_BLOCK, common))
        if _try_splice(base, cut, t) is not None:
            eights.append(t)
    if not eights:
        raise DerivationFailure("no EightBlock template")
    return library + eights


def _derivation(kind: BlockKind, common: int) -> dict:
    return {"constraints": _constraints(kind, common) if kind in SIGNATURES else {}, "search_version": SEARCH_VERSION}


def write_fixture(path, library: list[BlockTemplate]) -> None:
    # one template per line keeps diffs of the fixture readable
    rows = ",\n".join(" " + json.dumps(t.to_dict(), sort_keys=True) for t in library)
    with open(path, "w") as fh:
        fh.write("[\n" + rows + "\n]\n")


_LIBRARY: list[BlockTemplate] | None = None


def load_block_library() -> list[BlockTemplate]:
    """The frozen derivation output shipped with the package."""
    global _LIBRARY
    if _LIBRARY is None:
        text = resources.files("dstar").joinpath("data").joinpath(FIXTURE).read_text()
        _LIBRARY = [BlockTemplate.from_dict(d) for d in json.loads(text)]
    return _LIBRARY


def block(kind: BlockKind, library: list[BlockTemplate] | None = None) -> BlockTemplate:
    """First template of ``kind`` (canonical order)."""
    for t in library if library is not None else load_block_library():
        if t.kind is kind:
            return t
    raise ConstructionError(f"no {kind.value} template in the library")


# ----------------------------------------------------------------------
# assembly


def _pair_graph(star: BlockTemplate) -> tuple[Graph, tuple[int, int]]:
    if len(star.attachments) != 1:
        raise ConstructionError("HStarLeaf needs exactly one attachment")
    a = star.attachments[0]
    cut = (a, a + star.n)
    g = star.graph().disjoint_union(star.graph()).with_edges(add=[cut])
    return g, cut


def _valid(g: Graph) -> bool:
    return g.max_degree() <= 5 and contains_double_star(g) is None and is_planar(g)


def assemble_pair(star: BlockTemplate | None = None) -> Graph:
    """Two HStarLeaf copies joined by one edge between their attachment vertices."""
    g, _ = _pair_graph(star or block(BlockKind.H_STAR_LEAF))
    if not _valid(g):
        raise ConstructionError("joining two HStarLeaf copies is not planar and S_2,4-free")
    return g


def _try_splice(g: Graph, cut, tpl: BlockTemplate) -> Graph | None:
    x, y = cut
    a1, a2 = tpl.attachments
    off = g.n
    base = g.with_edges(remove=[(x, y)]).add_vertices(tpl.n, [(p + off, q + off) for p, q in tpl.edges])
    for s, t in ((a1, a2), (a2, a1)):
        h = base.with_edges(add=[(x, s + off), (y, t + off)])
        if _valid(h):
            return h
    return None


def splice_block(g: Graph, cut: tuple[int, int], tpl: BlockTemplate) -> Graph:
    """Replace edge ``cut = (x, y)`` by ``x - block - y``; block vertices get numbers ``g.n ..``."""
    if len(tpl.attachments) != 2:
        raise ConstructionError(f"{tpl.kind.value} has {len(tpl.attachments)} attachments, splicing needs 2")
    if not g.has_edge(*cut):
        raise ConstructionError(f"cut {cut} is not an edge")
    h = _try_splice(g, cut, tpl)
    if h is None:
        raise ConstructionError(f"splice failure at cut edge {tuple(cut)}")
    return h


def floor_bound(n: int) -> int:
    return 31 * n // 14


def build_extremal(n: int) -> Graph:
    """Planar S_{2,4}-free graph with floor(31n/14) edges, for n = 0 or 8 (mod 14).

    Path-shaped: HStarLeaf - HSharpPair - ... - HSharpPair - HStarLeaf, with the
    EightBlock spliced next to the second leaf when n = 8 (mod 14).
    """
    if n % 14 == 0 and n >= 14:
        pairs, eight = n // 14 - 1, False
    elif n % 14 == 8 and n >= 22:
        pairs, eight = (n - 8) // 14 - 1, True
    else:
        raise ValueError(f"n = {n}: supported are n >= 14 with n = 0 (mod 14) and n >= 22 with n = 8 (mod 14)")
    shape = path_shape(pairs, eight)
    g = build_tree_shape(shape)
    if g.m != floor_bound(n):
        raise ConstructionError(f"built {g.m} edges, expected {floor_bound(n)}")
    return g


# ----------------------------------------------------------------------
# tree shapes

_ARITY = {
    BlockKind.H_STAR_LEAF: 1,
    BlockKind.H_SHARP: 3,
    BlockKind.H_SHARP_PAIR: 2,
    BlockKind.EIGHT_BLOCK: 2,
}


@dataclass(frozen=True)
class TreeShape:
    """Blocks as tree nodes; each tree edge joins one free attachment of either end."""

    nodes: tuple[BlockKind, ...]
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def from_dict(cls, d: dict) -> TreeShape:
        return cls(tuple(BlockKind(k) for k in d["nodes"]), tuple((int(a), int(b)) for a, b in d["edges"]))

    def to_dict(self) -> dict:
        return {"nodes": [k.value for k in self.nodes], "edges": [list(e) for e in self.edges]}


def path_shape(pairs: int = 0, eight: bool = False) -> TreeShape:
    kinds = [BlockKind.H_STAR_LEAF] + [BlockKind.H_SHARP_PAIR] * pairs
    if eight:
        kinds.append(BlockKind.EIGHT_BLOCK)
    kinds.append(BlockKind.H_STAR_LEAF)
    return TreeShape(tuple(kinds), tuple((i, i + 1) for i in range(len(kinds) - 1)))


def star_shape(arms: tuple[int, int, int] = (1, 0, 0)) -> TreeShape:
    """An HSharp centre with three arms; arm ``i`` has ``arms[i]`` HSharpPair blocks before its leaf.

    The centre's attachments are used in order, so the default puts the long
    arm on a different stub class than ``path_shape(2)`` does.
    """
    nodes = [BlockKind.H_SHARP]
    edges = []
    for length in arms:
        prev = 0
        for kind in [BlockKind.H_SHARP_PAIR] * length + [BlockKind.H_STAR_LEAF]:
            nodes.append(kind)
            edges.append((prev, len(nodes) - 1))
            prev = len(nodes) - 1
    return TreeShape(tuple(nodes), tuple(edges))


def _check_tree(shape: TreeShape) -> None:
    k = len(shape.nodes)
    if k < 2 or len(shape.edges) != k - 1:
        raise ConstructionError("shape must be a tree on at least 2 nodes")
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    deg = [0] * k
    for a, b in shape.edges:
        if not (0 <= a < k and 0 <= b < k) or a == b:
            raise ConstructionError(f"bad tree edge {(a, b)}")
        ra, rb = find(a), find(b)
        if ra == rb:
            raise ConstructionError(f"tree edge {(a, b)} closes a cycle")
        parent[ra] = rb
        deg[a] += 1
        deg[b] += 1
    for i, kind in enumerate(shape.nodes):
        if deg[i] != _ARITY[kind]:
            raise ConstructionError(f"node {i} ({kind.value}) has tree degree {deg[i]}, needs {_ARITY[kind]}")


def build_tree_shape(shape: TreeShape, library: list[BlockTemplate] | None = None) -> Graph:
    """Realise ``shape``: blocks laid out in node order, one bridge per tree edge."""
    _check_tree(shape)
    templates = [block(kind, library) for kind in shape.nodes]
    offsets = list(itertools.accumulate([0] + [t.n for t in templates]))
    free = [[a + offsets[i] for a in t.attachments] for i, t in enumerate(templates)]
    edges = [(p + offsets[i], q + offsets[i]) for i, t in enumerate(templates) for p, q in t.edges]
    g = Graph(offsets[-1], edges)
    for a, b in shape.edges:
        # try every pairing of free attachments so the first valid one wins
        for i, j in itertools.product(range(len(free[a])), range(len(free[b]))):
            h = g.with_edges(add=[(free[a][i], free[b][j])]) if not g.has_edge(free[a][i], free[b][j]) else None
            if h is not None and contains_double_star(h) is None:
                g = h
                del free[a][i]
                del free[b][j]
                break
        else:
            raise ConstructionError(f"construction failure at tree edge {(a, b)}")
    if not _valid(g):
        raise ConstructionError("assembled graph is not planar and S_2,4-free")
    return g
