"""Canonical forms and isomorphism checks."""

from __future__ import annotations

from oracles import graphs_on, random_graph
from surfembed.core import Graph, complete_bipartite, cycle_graph, path_graph
from surfembed.iso import are_isomorphic, canonical_form


def test_relabeling_preserves_canonical_form(rng):
    for trial in range(80):
        g = random_graph(rng, rng.randrange(2, 9), 0.4)
        vs = sorted(g.vertices)
        img = rng.sample(range(100), len(vs))
        h = g.relabel(dict(zip(vs, img)))
        assert canonical_form(g) == canonical_form(h)
        assert are_isomorphic(g, h)


def test_non_isomorphic_pairs():
    assert not are_isomorphic(cycle_graph(6), path_graph(6))
    # same degree sequence, different graphs
    assert not are_isomorphic(cycle_graph(6), Graph(range(6), [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]))
    prism = Graph(range(6), [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
    assert not are_isomorphic(complete_bipartite(3, 3), prism)


def test_class_counts_match_known_sequence():
    # numbers of unlabeled graphs on 1..6 vertices
    assert [len(graphs_on(n)) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]
