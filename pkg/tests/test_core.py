"""Graph container, constructors, flow machinery, blocks, forests."""

from __future__ import annotations

import pytest

from oracles import random_graph, separator_cuts_everything
from surfembed.core import (
    Graph,
    MarkedGraph,
    blocks,
    complete_bipartite,
    complete_graph,
    cone,
    contract,
    cycle_graph,
    disjoint_union,
    identify_vertices,
    max_disjoint_paths,
    minimal_connecting_forest,
    norm_edge,
    path_graph,
)


def test_edges_normalize_and_dedupe():
    g = Graph([0, 1, 2], [(2, 0), (0, 2), (1, 2)])
    assert g.sorted_edges() == [(0, 2), (1, 2)]
    assert norm_edge(5, 3) == (3, 5)
    assert g.neighbors(2) == (0, 1)
    assert g.degree(2) == 2 and g.degree(1) == 1


def test_loops_rejected():
    with pytest.raises(ValueError):
        Graph([0, 1], [(0, 0)])


def test_edge_endpoints_become_vertices():
    g = Graph([0, 1], [(0, 2)])
    assert g.vertices == frozenset([0, 1, 2])


def test_graph_equality_and_hash():
    a = Graph([0, 1, 2], [(0, 1)])
    b = Graph([2, 1, 0], [(1, 0)])
    assert a == b
    assert hash(a) == hash(b)
    assert a != Graph([0, 1, 2], [(0, 2)])


def test_constructors_sizes():
    assert complete_graph(5).m == 10
    assert complete_bipartite(3, 3).m == 9
    assert cycle_graph(6).m == 6
    assert path_graph(4).m == 3
    # offset shifts labels without changing shape
    shifted = complete_graph(4, offset=10)
    assert min(shifted.vertices) == 10 and shifted.m == 6


def test_disjoint_union_shifts_labels():
    g = disjoint_union([complete_graph(3), complete_graph(3)])
    assert g.n == 6 and g.m == 6
    assert len(g.components()) == 2
    assert g.vertices == frozenset(range(6))


def test_subgraph_and_removals():
    g = complete_graph(5)
    h = g.subgraph([0, 1, 2])
    assert h == complete_graph(3)
    assert g.remove_vertices([4]) == complete_graph(4)
    assert g.remove_edges([(0, 1)]).m == 9
    assert g.add_edges([(0, 1)]) == g


def test_components_and_cycle_rank():
    g = disjoint_union([cycle_graph(3), path_graph(3, offset=3)])
    assert sorted(len(c) for c in g.components()) == [3, 3]
    # rank = m - n + components
    assert g.cycle_rank() == 1
    assert complete_graph(5).cycle_rank() == 6
    assert path_graph(6).cycle_rank() == 0


def test_shortest_path_avoid():
    g = cycle_graph(6)
    assert g.shortest_path(0, 3) in ([0, 1, 2, 3], [0, 5, 4, 3])
    assert g.shortest_path(0, 3, avoid=[1, 2]) == [0, 5, 4, 3]
    assert g.shortest_path(0, 3, avoid=[1, 5]) is None


def test_contract_triangle_to_edge():
    h, repmap = contract(cycle_graph(3), [(0, 1)])
    assert h.n == 2 and h.m == 1
    assert repmap[0] == repmap[1] != repmap[2]


def test_contract_chain_merges_transitively():
    g = path_graph(5)
    h, repmap = contract(g, [(1, 2), (2, 3)])
    assert h == Graph([0, 1, 4], [(0, 1), (1, 4)])
    assert repmap[3] == 1 and repmap[2] == 1


def test_identify_vertices_merges():
    g = path_graph(4)
    h = identify_vertices(g, 0, 3)
    assert h.n == 3 and h.cycle_rank() == 1


def test_cone_adds_apex_over_marked():
    g = cycle_graph(4)
    coned, apex = cone(g, [0, 2])
    assert apex not in g.vertices
    assert coned.degree(apex) == 2
    assert coned.m == g.m + 2


def test_marked_graph_validates():
    g = cycle_graph(3)
    mg = MarkedGraph(g, frozenset([0, 1]))
    assert mg.marked == frozenset([0, 1])
    with pytest.raises(ValueError):
        MarkedGraph(g, frozenset([7]))


def test_menger_on_k33():
    g = complete_bipartite(3, 3)
    ps = max_disjoint_paths(g, [0, 1, 2], [3, 4, 5])
    assert len(ps.paths) == 3
    assert len(ps.separator) == 3


def test_menger_internal_only():
    # two vertices joined by 3 internally disjoint paths of length 2
    g = Graph(range(5), [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)])
    ps = max_disjoint_paths(g, [0], [1], internal_only=True)
    assert len(ps.paths) == 3
    # endpoints excluded from the separator
    assert ps.separator <= {2, 3, 4}


def test_menger_trivial_path_on_overlap():
    g = path_graph(3)
    ps = max_disjoint_paths(g, [0, 1], [1, 2])
    assert any(len(p) == 1 for p in ps.paths)


def test_menger_duality_random(rng):
    # paths disjoint, endpoints right, and the separator meets every
    # source-sink path of the host (checked by exhaustive enumeration)
    for trial in range(120):
        n = rng.randrange(4, 11)
        g = random_graph(rng, n, 0.35)
        vs = sorted(g.vertices)
        a = frozenset(rng.sample(vs, rng.randrange(1, 4)))
        b = frozenset(rng.sample(vs, rng.randrange(1, 4)))
        ps = max_disjoint_paths(g, a, b)
        assert len(ps.paths) == len(ps.separator)
        seen: set[int] = set()
        for p in ps.paths:
            assert p[0] in a and p[-1] in b
            assert not (set(p) & seen)
            seen.update(p)
            for u, v in zip(p, p[1:]):
                assert g.has_edge(u, v)
        assert separator_cuts_everything(g, a, b, ps.separator)


def test_blocks_two_triangles_at_cut():
    g = Graph(range(5), [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    bs = blocks(g)
    assert len(bs.blocks) == 2
    assert bs.cut_vertices == frozenset([2])
    parts = bs.block_graphs(g)
    assert all(p.m == 3 for p in parts)


def test_blocks_partition_edges(rng):
    for trial in range(60):
        g = random_graph(rng, rng.randrange(3, 10), 0.3)
        bs = blocks(g)
        union: set = set()
        for b in bs.blocks:
            assert not (b & union)
            union |= b
        assert union == g.edges


def test_minimal_forest_leaves_are_terminals(rng):
    for trial in range(60):
        g = random_graph(rng, rng.randrange(3, 10), 0.4)
        vs = sorted(g.vertices)
        terms = set(rng.sample(vs, rng.randrange(1, len(vs) + 1)))
        f = minimal_connecting_forest(g, terms)
        assert f.cycle_rank() == 0
        fcomps = f.components()
        for comp in g.components():
            t = terms & comp
            if t:
                assert any(t <= fc for fc in fcomps)
        for v in f.vertices:
            if f.degree(v) <= 1:
                assert v in terms
