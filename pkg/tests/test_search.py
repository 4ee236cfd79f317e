import json

import networkx as nx
import pytest
from networkx.algorithms import isomorphism

from dstar.canon import canonical_form
from dstar.graph import Graph, complete_graph, double_star, icosahedron, path_graph
from dstar.patterns import contains_double_star
from dstar.planarity import is_planar
from dstar.search import (
    TRIANGULATION_COUNTS,
    CapacityError,
    brute_force_contains,
    enumerate_triangulations,
    max_edges_exact,
)

from conftest import to_nx


def test_triangulation_counts():
    for n, count in TRIANGULATION_COUNTS.items():
        if n <= 9:
            ts = enumerate_triangulations(n)
            assert len(ts) == count
            assert len({canonical_form(t) for t in ts}) == count


def test_triangulations_match_networkx_isomorphism_classes():
    ts = enumerate_triangulations(7)
    for i, a in enumerate(ts):
        for b in ts[i + 1 :]:
            assert not nx.is_isomorphic(to_nx(a), to_nx(b))


def test_brute_force_oracle():
    assert brute_force_contains(double_star(2, 4), double_star(2, 4))
    assert not brute_force_contains(complete_graph(7), double_star(2, 4))
    assert brute_force_contains(icosahedron(), double_star(2, 4))
    assert brute_force_contains(complete_graph(4), path_graph(4))
    assert not brute_force_contains(path_graph(3), complete_graph(3))


def test_brute_force_against_networkx_monomorphism():
    pattern = double_star(2, 3)
    for t in enumerate_triangulations(8):
        gm = isomorphism.GraphMatcher(to_nx(t), to_nx(pattern))
        assert brute_force_contains(t, pattern) == gm.subgraph_is_monomorphic()


@pytest.mark.parametrize("n", range(1, 8))
def test_small_n_is_triangulation_count(n):
    expected = {1: 0, 2: 1}.get(n, 3 * n - 6)
    assert max_edges_exact(n).max_edges == expected


def test_witnesses_are_valid_and_distinct():
    r = max_edges_exact(8)
    assert r.max_edges == 16
    forms = set()
    for w in r.witnesses:
        assert w.n == 8 and w.m == 16
        assert is_planar(w) and contains_double_star(w) is None
        forms.add(canonical_form(w))
    assert len(forms) == len(r.witnesses)


def test_other_patterns():
    # S_{1,1} is P_4; planar P_4-free graphs are disjoint triangles and stars
    assert max_edges_exact(6, 1, 1).max_edges == 6
    assert max_edges_exact(7, 2, 2).max_edges < 15


def test_parallel_matches_serial():
    a = max_edges_exact(8, jobs=1)
    b = max_edges_exact(8, jobs=3)
    assert (a.max_edges, a.witness_codes) == (b.max_edges, b.witness_codes)


def test_checkpoint_resume(tmp_path):
    ref = max_edges_exact(8)
    ckpt = tmp_path / "run.json"
    max_edges_exact(8, checkpoint=ckpt)
    state = json.loads(ckpt.read_text())
    assert state["format"] == "dstar-search-checkpoint"
    # pretend the run died halfway through the final budget
    keep = sorted(state["completed"], key=int)[: len(state["completed"]) // 2]
    state["completed"] = {k: state["completed"][k] for k in keep}
    ckpt.write_text(json.dumps(state))
    resumed = max_edges_exact(8, checkpoint=ckpt)
    assert (resumed.max_edges, resumed.witness_codes) == (ref.max_edges, ref.witness_codes)


def test_checkpoint_mismatch(tmp_path):
    ckpt = tmp_path / "run.json"
    max_edges_exact(6, checkpoint=ckpt)
    with pytest.raises(ValueError):
        max_edges_exact(7, checkpoint=ckpt)


def test_capacity():
    with pytest.raises(CapacityError):
        max_edges_exact(11)


def test_audit_counts_disagreements():
    r = max_edges_exact(7, audit_every=1)
    assert r.audited == r.nodes_explored and r.disagreements == 0


def test_table_row():
    r = max_edges_exact(5)
    assert r.table_row() == "5\t9\t1"
    assert Graph(5) not in r.witnesses


def test_no_planar_8_vertex_17_edge_graph_is_free():
    # every planar graph on n >= 3 vertices sits inside a triangulation on the
    # same vertices, so the 17-edge candidates are the one-edge deletions of the
    # 14 triangulations; networkx monomorphism is the oracle here
    pattern = to_nx(double_star(2, 4))
    ts = enumerate_triangulations(8)
    assert len(ts) == 14
    for t in ts:
        for e in t.edges():
            h = to_nx(t.with_edges(remove=[e]))
            assert isomorphism.GraphMatcher(h, pattern).subgraph_is_monomorphic()
    for w in max_edges_exact(8).witnesses:
        assert not isomorphism.GraphMatcher(to_nx(w), pattern).subgraph_is_monomorphic()


def test_oracle_and_enumerator_limits():
    with pytest.raises(CapacityError):
        brute_force_contains(complete_graph(12), Graph(11))
    with pytest.raises(CapacityError):
        enumerate_triangulations(3)
    assert not brute_force_contains(Graph(8, [(i, (i + 1) % 8) for i in range(8)]), double_star(2, 4))


def test_detector_audit_ten_thousand_visits():
    # every graph visited by the searches below is re-checked by the oracle
    audited = disagreements = 0
    for n in range(5, 9):
        r = max_edges_exact(n, audit_every=1)
        audited += r.audited
        disagreements += r.disagreements
    r = max_edges_exact(8, 2, 3, audit_every=1)
    audited += r.audited
    disagreements += r.disagreements
    assert audited >= 10_000
    assert disagreements == 0


def test_theorem_bound_cross_check():
    for n in range(1, 10):
        assert max_edges_exact(n).max_edges <= 31 * n // 14
