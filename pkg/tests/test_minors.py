"""Minor search, model verification, packing, composition."""

from __future__ import annotations

import pytest

from oracles import has_k4_minor, random_graph
from surfembed.core import (
    Graph,
    MarkedGraph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
)
from surfembed.minors import (
    MinorModel,
    compose_models,
    find_marked_minor,
    find_minor,
    pack_bouquet,
    pack_disjoint,
    verify_marked_model,
    verify_model,
)

PETERSEN = Graph(
    range(10),
    [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
     (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
     (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)],
)


def test_identity_minor():
    g = complete_graph(4)
    res = find_minor(g, g)
    assert res.found
    ok, errs = verify_model(g, g, res.model)
    assert ok, errs


def test_k5_minor_of_petersen():
    res = find_minor(PETERSEN, complete_graph(5))
    assert res.found
    ok, errs = verify_model(PETERSEN, complete_graph(5), res.model)
    assert ok, errs


def test_absent_when_host_too_small():
    res = find_minor(complete_graph(5), complete_bipartite(3, 3))
    assert res.status == "absent"


def test_c4_minor_of_c5_but_not_of_tree():
    assert find_minor(cycle_graph(5), cycle_graph(4)).found
    assert find_minor(path_graph(6), cycle_graph(4)).status == "absent"


def test_verify_model_catches_corruption():
    g = cycle_graph(5)
    res = find_minor(g, cycle_graph(4))
    m = res.model
    # split a connected branch set
    bs = dict(m.branch_sets)
    fat = next(pv for pv, b in bs.items() if len(b) == 2)
    lone = next(pv for pv, b in bs.items() if len(b) == 1)
    bs[fat], bs[lone] = frozenset([min(bs[fat]), *bs[lone]]), frozenset([max(bs[fat])])
    ok, errs = verify_model(g, cycle_graph(4), MinorModel(bs, m.connect_edges))
    assert not ok and errs
    # drop a connector
    ce = dict(m.connect_edges)
    ce.popitem()
    ok, errs = verify_model(g, cycle_graph(4), MinorModel(m.branch_sets, ce))
    assert not ok and errs
    # overlapping branch sets
    bs2 = dict(m.branch_sets)
    a, b = sorted(bs2)[:2]
    bs2[a] = bs2[a] | bs2[b]
    ok, errs = verify_model(g, cycle_graph(4), MinorModel(bs2, m.connect_edges))
    assert not ok and errs


def test_roots_pin_branch_sets():
    g = cycle_graph(6)
    res = find_minor(g, cycle_graph(3), roots={0: 4})
    assert res.found
    assert 4 in res.model.branch_sets[0]


def test_through_forces_support():
    g = disjoint_union([cycle_graph(3), cycle_graph(3)])
    res = find_minor(g, cycle_graph(3), through=5)
    assert res.found
    assert 5 in res.model.support()


def test_marked_minor_respects_marks():
    # host: 4-cycle marked on two opposite vertices
    host = MarkedGraph(cycle_graph(4), frozenset([0, 2]))
    patt = MarkedGraph(path_graph(2), frozenset([0, 1]))
    res = find_marked_minor(host, patt)
    assert res.found
    ok, errs = verify_marked_model(host, patt, res.model)
    assert ok, errs
    # every marked pattern vertex grabbed a marked host vertex
    for pv in patt.marked:
        assert res.model.branch_sets[pv] & host.marked
    # demand three marked endpoints of a path with only two marked hosts
    patt3 = MarkedGraph(path_graph(3), frozenset([0, 1, 2]))
    assert find_marked_minor(host, patt3).status == "absent"


def test_verify_marked_model_checks_marks():
    host = MarkedGraph(cycle_graph(4), frozenset([0, 2]))
    patt = MarkedGraph(path_graph(2), frozenset([0]))
    res = find_marked_minor(host, patt)
    assert res.found
    # swap in a branch set that misses the marks for a marked pattern vertex
    bs = dict(res.model.branch_sets)
    marked_pv = 0
    bs[marked_pv] = bs[marked_pv] - host.marked or frozenset([1])
    from surfembed.minors import MarkedMinorModel

    bad = MarkedMinorModel(bs, res.model.connect_edges, host.marked)
    ok, errs = verify_marked_model(host, patt, bad)
    assert not ok


def test_pack_disjoint_two_triangles():
    g = disjoint_union([cycle_graph(3), cycle_graph(3)])
    res = pack_disjoint(g, cycle_graph(3), 2)
    assert res.complete and res.exhausted
    assert len(res.models) == 2
    supports = [m.support() for m in res.models]
    assert not (supports[0] & supports[1])


def test_pack_disjoint_certifies_shortfall():
    res = pack_disjoint(cycle_graph(3), cycle_graph(3), 2)
    assert not res.complete and res.exhausted
    assert len(res.models) == 1


def test_pack_bouquet_friendship():
    # three triangles through one shared vertex
    g = Graph(range(7), [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (0, 5), (0, 6), (5, 6)])
    res = pack_bouquet(g, cycle_graph(3), hub=0, n=3)
    assert res.complete
    assert res.hub_vertex == 0
    supports = [m.support() for m in res.models]
    for i in range(3):
        for j in range(i + 1, 3):
            assert supports[i] & supports[j] == {0}
    for m in res.models:
        assert 0 in m.branch_sets[0]


def test_pack_bouquet_impossible_on_path():
    res = pack_bouquet(path_graph(5), cycle_graph(3), hub=0, n=1)
    assert not res.complete and res.exhausted


def test_compose_models():
    # triangle < hexagon < subdivided hexagon
    c6, c3 = cycle_graph(6), cycle_graph(3)
    host = Graph(
        range(12),
        [(0, 6), (6, 1), (1, 7), (7, 2), (2, 8), (8, 3),
         (3, 9), (9, 4), (4, 10), (10, 5), (5, 11), (11, 0)],
    )
    inner = find_minor(host, c6).model
    outer = find_minor(c6, c3).model
    combined = compose_models(outer, inner)
    ok, errs = verify_model(host, c3, combined)
    assert ok, errs


def test_minor_search_matches_subdivision_oracle(rng):
    # for max-degree-3 patterns, minor and subdivision containment agree
    k4 = complete_graph(4)
    for trial in range(80):
        g = random_graph(rng, rng.randrange(4, 9), 0.4)
        res = find_minor(g, k4)
        assert res.status in ("found", "absent")
        assert res.found == has_k4_minor(g)
        if res.found:
            ok, errs = verify_model(g, k4, res.model)
            assert ok, errs


def test_pack_rejects_bad_count():
    with pytest.raises(ValueError):
        pack_disjoint(cycle_graph(3), cycle_graph(3), 0)
    with pytest.raises(ValueError):
        pack_bouquet(cycle_graph(3), cycle_graph(3), hub=0, n=0)
