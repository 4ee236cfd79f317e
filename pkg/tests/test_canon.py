import random

import networkx as nx
import pytest

from dstar.canon import canonical_form, canonical_form_bruteforce, canonical_labeling
from dstar.graph import Graph, GraphError, complete_graph, cycle_graph, icosahedron

from conftest import random_graph, to_nx

# number of graphs on n unlabelled vertices (OEIS A000088)
A000088 = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156}


def test_class_counts(classes_upto_6):
    assert {n: len(v) for n, v in classes_upto_6.items()} == A000088


def test_against_bruteforce_all_small(classes_upto_6):
    rng = random.Random(1)
    for n, reps in classes_upto_6.items():
        for g in reps:
            perm = list(range(n))
            rng.shuffle(perm)
            h = g.relabel(perm)
            assert canonical_form(h) == canonical_form(g)
            assert (canonical_form_bruteforce(h) == canonical_form_bruteforce(g))


def test_distinguishes_exactly_like_networkx():
    rng = random.Random(2)
    graphs = [random_graph(rng, 8, 0.4) for _ in range(120)]
    for a in graphs[:40]:
        for b in graphs:
            same = canonical_form(a) == canonical_form(b)
            assert same == nx.is_isomorphic(to_nx(a), to_nx(b))


def test_labeling_is_permutation_and_relabel_invariant():
    g = icosahedron()
    perm = canonical_labeling(g)
    assert sorted(perm) == list(range(12))
    rng = random.Random(3)
    p = list(range(12))
    rng.shuffle(p)
    assert canonical_form(g.relabel(p)) == canonical_form(g)


def test_regular_graphs():
    # strongly regular and vertex-transitive inputs stress the backtracking
    pet = Graph(10, list(nx.petersen_graph().edges()))
    assert canonical_form(pet) != canonical_form(cycle_graph(5).disjoint_union(cycle_graph(5)))
    assert canonical_form(complete_graph(7)) == canonical_form(complete_graph(7).relabel([6, 5, 4, 3, 2, 1, 0]))


def test_coloured_forms():
    p = Graph(3, [(0, 1), (1, 2)])
    assert canonical_form(p, [1, 0, 0]) == canonical_form(p, [0, 0, 1])
    assert canonical_form(p, [1, 0, 0]) != canonical_form(p, [0, 1, 0])
    with pytest.raises(GraphError):
        canonical_form(p, [0])


def test_bruteforce_limit():
    with pytest.raises(GraphError):
        canonical_form_bruteforce(Graph(9))


def test_same_degree_sequence_distinguished():
    two_triangles = complete_graph(3).disjoint_union(complete_graph(3))
    assert canonical_form(cycle_graph(6)) != canonical_form(two_triangles)
