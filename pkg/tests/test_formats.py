import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dstar.formats import (
    FormatError,
    detect_format,
    from_edge_list,
    from_graph6,
    read_graph,
    to_edge_list,
    to_graph6,
    write_graph,
)
from dstar.graph import Graph, complete_graph, empty_graph, path_graph

from conftest import to_nx


@st.composite
def graphs(draw, max_n=70):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not pairs:
        return Graph(n)
    chosen = draw(st.lists(st.sampled_from(pairs), max_size=60))
    return Graph(n, chosen)


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_graph6_matches_networkx(g):
    ours = to_graph6(g)
    theirs = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert ours == theirs
    assert from_graph6(ours) == g


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=30))
def test_edge_list_roundtrip(g):
    assert from_edge_list(to_edge_list(g)) == g


def test_known_codes():
    assert to_graph6(empty_graph(0)) == "?"
    assert to_graph6(complete_graph(4)) == "C~"
    assert to_graph6(path_graph(2), header=True) == ">>graph6<<A_"
    assert from_graph6(">>graph6<<A_") == path_graph(2)


def test_large_n_encoding():
    g = path_graph(100)
    code = to_graph6(g)
    assert code.startswith("~?@c")
    assert from_graph6(code) == g


@pytest.mark.parametrize("text", ["", "A", "C~~", "B\x10", "A~"])
def test_bad_graph6(text):
    with pytest.raises(FormatError):
        from_graph6(text)


@pytest.mark.parametrize(
    "text",
    ["", "3 1\n0 5\n", "3 2\n0 1\n", "3 1\n0 1\n1 0\n", "2 1\n0 x\n", "3 1\n1 1\n"],
)
def test_bad_edge_list(text):
    with pytest.raises(FormatError):
        from_edge_list(text)


def test_edge_list_comments():
    g = from_edge_list("# triangle\n3 3\n0 1\n1 2  # second\n2 0\n")
    assert g == complete_graph(3)


def test_files(tmp_path):
    g = complete_graph(4)
    for name in ("k4.g6", "k4.txt"):
        p = tmp_path / name
        write_graph(g, p)
        assert read_graph(p) == g
    assert detect_format("x.graph6") == "graph6" and detect_format("x.el") == "edgelist"
    p = tmp_path / "k4.dat"
    p.write_text(to_graph6(g) + "\n")
    assert read_graph(p, "graph6") == g
