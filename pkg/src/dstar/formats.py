"""graph6 and plain edge-list serialization.

The edge-list format is a header line ``n m`` followed by ``m`` lines ``u v``
(0-based).  Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

from pathlib import Path

from .graph import Graph, GraphError

G6_HEADER = ">>graph6<<"


class FormatError(GraphError):
    pass


# graph6 -----------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 68719476736:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise FormatError(f"graph too large for graph6: n={n}")


def _decode_n(data: bytes) -> tuple[int, int]:
    if not data:
        raise FormatError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) > 1 and data[1] == 126:
        width, start = 6, 2
    else:
        width, start = 3, 1
    chunk = data[start : start + width]
    if len(chunk) < width:
        raise FormatError("truncated graph6 size field")
    n = 0
    for c in chunk:
        n = (n << 6) | (c - 63)
    return n, start + width


def to_graph6(g: Graph, header: bool = False) -> str:
    n = g.n
    adj = g.adjacency
    bits = [1 if j in adj[i] else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[k : k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return (G6_HEADER if header else "") + _encode_n(n) + body


def from_graph6(text: str | bytes) -> Graph:
    if isinstance(text, str):
        text = text.encode("ascii")
    data = text.strip()
    if data.startswith(G6_HEADER.encode()):
        data = data[len(G6_HEADER) :]
    if any(c < 63 or c > 126 for c in data):
        raise FormatError("graph6 characters must lie in 63..126")
    n, pos = _decode_n(data)
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise FormatError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}")
    edges = []
    k = 0
    groups = [c - 63 for c in body]
    for j in range(1, n):
        for i in range(j):
            if (groups[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    if need and groups[-1] & ((1 << (6 * need - k)) - 1):
        raise FormatError("graph6 padding bits must be zero")
    return Graph(n, edges)


# edge list --------------------------------------------------------------


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise FormatError("edge list is empty")
    try:
        header = [int(x) for x in rows[0]]
        if len(header) != 2:
            raise ValueError
        n, m = header
        edges = []
        for r in rows[1:]:
            if len(r) != 2:
                raise ValueError
            edges.append((int(r[0]), int(r[1])))
    except ValueError:
        raise FormatError("edge list lines must hold two integers") from None
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges, found {len(edges)}")
    if len({frozenset(e) for e in edges}) != m:
        raise FormatError("edge list contains parallel edges")
    try:
        return Graph(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


# files ------------------------------------------------------------------


def detect_format(path: str | Path) -> str:
    return "graph6" if Path(path).suffix.lower() in (".g6", ".graph6") else "edgelist"


def read_graph(path: str | Path, fmt: str | None = None) -> Graph:
    """Read a single graph; ``fmt`` is ``graph6`` or ``edgelist`` (default: by extension)."""
    fmt = fmt or detect_format(path)
    text = Path(path).read_text()
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise FormatError(f"expected one graph6 line, found {len(lines)}")
        return from_graph6(lines[0])
    if fmt == "edgelist":
        return from_edge_list(text)
    raise FormatError(f"unknown format {fmt!r}")


def write_graph(g: Graph, path: str | Path, fmt: str | None = None) -> None:
    fmt = fmt or detect_format(path)
    if fmt == "graph6":
        Path(path).write_text(to_graph6(g) + "\n")
    elif fmt == "edgelist":
        Path(path).write_text(to_edge_list(g))
    else:
        raise FormatError(f"unknown format {fmt!r}")
