import json
import random

import pytest

from dstar.certify import (
    CertificationFailure,
    DecompositionCertificate,
    LemmaHypothesisError,
    Part,
    PartKind,
    decompose,
    expansion_steps,
    five_five_block,
    maximal_expansion,
    validate_certificate,
)
from dstar.construct import assemble_pair
from dstar.formats import from_graph6
from dstar.graph import Graph, GraphError, complete_graph, cycle_graph, icosahedron, wheel_graph
from dstar.patterns import PatternKind, PatternMatch, contains_double_star, find_kl_edges
from dstar.planarity import is_planar
from dstar.reduce import peel

from conftest import edge_deleted_triangulation


def test_k4_single_residual():
    cert = decompose(complete_graph(4))
    assert [(p.kind, p.weight2, p.passes) for p in cert.parts] == [(PartKind.RESIDUAL, 12, True)]
    assert cert.global_ok and validate_certificate(complete_graph(4), cert).ok


def test_wheel_is_degree_six_component():
    g = wheel_graph(6)
    assert is_planar(g) and contains_double_star(g) is None
    cert = decompose(g)
    assert len(cert.parts) == 1
    part = cert.parts[0]
    assert part.kind is PartKind.DEG6_COMPONENT and len(part.vertices) == 7
    assert part.weight2 == 2 * g.m and g.m <= 15 and part.passes


def test_extremal_pair_two_blocks():
    g = assemble_pair()
    cert = decompose(g)
    assert [p.kind for p in cert.parts] == [PartKind.FIVE_FIVE_BLOCK] * 2
    assert [len(p.vertices) for p in cert.parts] == [7, 7]
    assert [p.weight2 for p in cert.parts] == [31, 31]
    # equality: 7 * 31 == 31 * 7
    assert all(7 * p.weight2 == 31 * len(p.vertices) for p in cert.parts)
    assert cert.total_weight2 == 2 * 31
    assert validate_certificate(g, cert).ok


def test_extremal_pair_five_five_edges_stay_inside_blocks():
    g = assemble_pair()
    matches = find_kl_edges(g, 5, 5)
    deg = g.degrees()
    # counted independently of the pattern finder
    assert len(matches) == sum(1 for u, v in g.edges() if deg[u] == deg[v] == 5) == 6
    cert = decompose(g)
    owners = []
    for m in matches:
        u, v = m.centers
        (i,) = [i for i, p in enumerate(cert.parts) if u in p.vertices]
        assert v in cert.parts[i].vertices
        owners.append(i)
    assert sorted(owners) == [0, 0, 0, 1, 1, 1]


@pytest.mark.parametrize(
    "g, hypothesis",
    [(complete_graph(5), "planarity"), (icosahedron(), "S24-free"), (cycle_graph(5), "min-degree")],
)
def test_hypothesis_errors(g, hypothesis):
    with pytest.raises(LemmaHypothesisError) as info:
        decompose(g)
    assert info.value.hypothesis == hypothesis
    if hypothesis == "S24-free":
        assert info.value.witness is not None


def test_deterministic():
    g = from_graph6("HxUC?}F")
    assert decompose(g).to_dict() == decompose(g).to_dict()


def test_five_five_closure_absorbs_degree_three_vertex():
    # 5-5 edge 0-1 with 4 common neighbours 2..5; 6 has degree 3 and touches 2 and 3
    edges = [(0, 1)] + [(h, a) for h in (0, 1) for a in (2, 3, 4, 5)]
    edges += [(2, 6), (3, 6), (6, 7), (4, 7), (5, 7)]
    g = Graph(8, edges)
    assert g.degrees()[6] == 3
    assert five_five_block(g, 0, 1) == {0, 1, 2, 3, 4, 5, 6, 7}


# ----------------------------------------------------------------------
# maximal expansion


def _seed(x, y, z, mid=4):
    return PatternMatch(PatternKind.KLS_PATH, (x, y, z), params=(5, mid, 5))


def _chain_graph(extra_hubs: int) -> Graph:
    """5-4-5 seed 0-1-2, then a 5-3-5 link 2-3-4 through a shared triangle, then more hubs.

    Hub 4 carries pendant leaves; each further hub hangs off a link vertex that
    is a neighbour of the previous hub.
    """
    edges = [(0, 1), (1, 2), (0, 5), (0, 6), (2, 5), (2, 6), (1, 5), (1, 6), (0, 7), (0, 8)]
    edges += [(2, 3), (3, 4), (2, 9), (4, 9), (3, 9)]
    n = 10
    hub = 4
    for _ in range(extra_hubs):
        link, nxt = n, n + 1
        edges += [(hub, link), (link, nxt)]
        edges += [(hub, n + 2), (hub, n + 3)]
        edges += [(nxt, n + 4 + i) for i in range(4)]
        hub, n = nxt, n + 8
    deg = Graph(n, edges).degrees()
    edges += [(hub, n + i) for i in range(5 - deg[hub])]
    return Graph(n + 5 - deg[hub], edges)


def test_expansion_zero_steps():
    g = from_graph6("HxUC?}F")
    assert is_planar(g) and contains_double_star(g) is None and g.min_degree() >= 3
    seed = _seed(0, 8, 7)
    block, absorbed = expansion_steps(g, seed)
    assert absorbed == []
    assert block == set(g.adjacency[0]) | set(g.adjacency[7]) | {0, 7}


def test_expansion_one_step_absorbs_linked_hub():
    g = _chain_graph(0)
    assert is_planar(g)
    deg = g.degrees()
    assert (deg[0], deg[1], deg[2], deg[3], deg[4]) == (5, 4, 5, 3, 5)
    block, absorbed = expansion_steps(g, _seed(0, 1, 2))
    assert absorbed == [4]
    assert block == {0, 1, 2} | set(g.adjacency[0]) | set(g.adjacency[2]) | set(g.adjacency[4]) | {4}
    assert maximal_expansion(g, _seed(0, 1, 2)) == block


def test_expansion_two_steps():
    g = _chain_graph(1)
    assert is_planar(g)
    block, absorbed = expansion_steps(g, _seed(0, 1, 2))
    assert absorbed == [4, 11]
    expected = set()
    for hub in (0, 2, 4, 11):
        expected |= set(g.adjacency[hub]) | {hub}
    assert block == expected


def test_expansion_rejects_bad_seed():
    g = _chain_graph(0)
    with pytest.raises(GraphError):
        maximal_expansion(g, _seed(0, 2, 1))
    with pytest.raises(GraphError):
        maximal_expansion(g, PatternMatch(PatternKind.KL_EDGE, (0, 1), params=(5, 4)))


# ----------------------------------------------------------------------
# validation


def _good():
    g = assemble_pair()
    return g, decompose(g)


def _tamper(cert, i, **changes):
    parts = list(cert.parts)
    p = parts[i]
    parts[i] = Part(changes.get("kind", p.kind), changes.get("vertices", p.vertices),
                    changes.get("weight2", p.weight2), changes.get("passes", p.passes))
    return DecompositionCertificate(parts, changes.get("global_ok", cert.global_ok), cert.graph_hash, cert.n, cert.m)


def _checks(report):
    return {v.split(":")[0] for v in report.violations}


def test_tamper_weight():
    g, cert = _good()
    assert "weight recomputation" in _checks(validate_certificate(g, _tamper(cert, 0, weight2=30)))


def test_tamper_disjointness_and_coverage():
    g, cert = _good()
    moved = cert.parts[0].vertices + (cert.parts[1].vertices[0],)
    checks = _checks(validate_certificate(g, _tamper(cert, 0, vertices=moved)))
    assert "disjointness" in checks
    dropped = cert.parts[0].vertices[1:]
    assert "coverage" in _checks(validate_certificate(g, _tamper(cert, 0, vertices=dropped)))


def test_tamper_flags_and_kind():
    g, cert = _good()
    assert "passes flag" in _checks(validate_certificate(g, _tamper(cert, 0, passes=False)))
    assert "degree conditions" in _checks(validate_certificate(g, _tamper(cert, 0, kind=PartKind.RESIDUAL)))
    assert "global_ok" in _checks(validate_certificate(g, _tamper(cert, 0, global_ok=False)))
    assert "range" in _checks(validate_certificate(g, _tamper(cert, 0, vertices=(99,))))


def test_bound_violation_reported():
    g = complete_graph(4)
    cert = DecompositionCertificate(
        [Part(PartKind.RESIDUAL, (0,), 3, True), Part(PartKind.RESIDUAL, (1, 2, 3), 9, True)], True
    )
    checks = _checks(validate_certificate(g, cert))
    assert "residual position" in checks


def test_json_roundtrip():
    g, cert = _good()
    data = json.loads(cert.to_json())
    assert data["format"] == "dstar-certificate" and data["graph_hash"].startswith("sha256:")
    back = DecompositionCertificate.from_dict(data)
    assert back.parts == cert.parts and back.global_ok
    with pytest.raises(ValueError):
        DecompositionCertificate.from_dict({"format": "other"})


def test_random_cores_certify():
    rng = random.Random(17)
    certified = 0
    while certified < 150:
        g = edge_deleted_triangulation(rng, rng.randint(6, 10))
        if contains_double_star(g) is not None:
            continue
        core = peel(g).reduced
        if core.n == 0:
            continue
        cert = decompose(core)
        report = validate_certificate(core, cert)
        assert report.ok, report.violations
        assert cert.global_ok
        assert cert.total_weight2 == 2 * core.m
        certified += 1


def test_failure_error_carries_vertex():
    err = CertificationFailure(7, "stuck")
    assert err.vertex == 7 and "vertex 7" in str(err)
