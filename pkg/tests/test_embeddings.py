"""Rotation systems, faces, genus search, planarity, Kuratowski witnesses."""

from __future__ import annotations

import pytest

from oracles import planar_by_subdivision, random_graph
from surfembed.core import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    identify_vertices,
    path_graph,
)
from surfembed.embeddings import (
    KuratowskiWitness,
    RotationSystem,
    genus_additivity,
    genus_of_rotation,
    handle_merge,
    min_genus,
    planarity,
    trace_faces,
    validate_rotation,
    verify_kuratowski,
)


def _planar_rotation(g: Graph) -> RotationSystem:
    res = planarity(g)
    assert res.planar
    return res.rotation


def test_rotation_round_trip():
    rot = RotationSystem.from_dict({0: [1, 2], 1: [0, 2], 2: [0, 1]})
    assert rot.as_dict() == {0: (1, 2), 1: (0, 2), 2: (0, 1)}
    assert rot.at(1) == (0, 2)
    with pytest.raises(KeyError):
        rot.at(9)


def test_validate_rotation_rejects_wrong_neighbors():
    g = cycle_graph(3)
    good = RotationSystem.from_dict({0: [1, 2], 1: [0, 2], 2: [0, 1]})
    validate_rotation(g, good)
    with pytest.raises(ValueError):
        validate_rotation(g, RotationSystem.from_dict({0: [1], 1: [0, 2], 2: [0, 1]}))
    with pytest.raises(ValueError):
        validate_rotation(g, RotationSystem.from_dict({0: [1, 2], 1: [0, 2]}))


def test_trace_faces_tetrahedron():
    g = complete_graph(4)
    rot = _planar_rotation(g)
    faces = trace_faces(g, rot)
    # V - E + F = 2 on the sphere
    assert len(faces) == 4
    darts = [d for f in faces.faces for d in f]
    assert len(darts) == 2 * g.m
    assert len(set(darts)) == len(darts)


def test_genus_of_rotation_extremes():
    g = complete_graph(4)
    assert genus_of_rotation(g, _planar_rotation(g)) == 0
    # all-identical cyclic orders on K4 give a positive-genus embedding
    twisted = RotationSystem.from_dict(
        {v: [u for u in range(4) if u != v] for v in range(4)}
    )
    assert genus_of_rotation(g, twisted) == 1


def test_min_genus_small_complete_graphs():
    r5 = min_genus(complete_graph(5), budget=2)
    assert r5.status == "ok" and r5.genus == 1
    assert genus_of_rotation(complete_graph(5), r5.rotation) == 1
    r33 = min_genus(complete_bipartite(3, 3), budget=2)
    assert r33.status == "ok" and r33.genus == 1
    r4 = min_genus(complete_graph(4), budget=1)
    assert r4.genus == 0


def test_min_genus_budget_certificate():
    res = min_genus(complete_graph(5), budget=0)
    assert res.status == "exceeds-budget"
    assert res.lower_bound >= 1
    assert res.genus is None


def test_min_genus_additive_over_components():
    g = disjoint_union([complete_graph(5), complete_graph(5)])
    res = min_genus(g, budget=2)
    assert res.status == "ok" and res.genus == 2


def test_genus_additivity_over_blocks():
    # two K5 blocks sharing one cut vertex
    g = disjoint_union([complete_graph(5), complete_graph(5)])
    g = identify_vertices(g, 4, 5)
    res = genus_additivity(g, budget=2)
    assert res.status == "ok" and res.genus == 2
    validate_rotation_target = res.rotation
    validate_rotation(g, validate_rotation_target)
    assert genus_of_rotation(g, res.rotation) == 2


def test_planarity_positive_certificates():
    for g in (complete_graph(4), cycle_graph(7), complete_bipartite(2, 5), path_graph(1)):
        res = planarity(g)
        assert res.planar
        validate_rotation(g, res.rotation)
        assert genus_of_rotation(g, res.rotation) == 0


def test_planarity_negative_certificates():
    for g, kind in ((complete_graph(5), "K5"), (complete_bipartite(3, 3), "K33")):
        res = planarity(g)
        assert not res.planar
        assert res.witness.kind == kind
        assert verify_kuratowski(g, res.witness) == []


def test_kuratowski_in_subdivided_host():
    # K33 with every edge subdivided once, plus a pendant path
    base = complete_bipartite(3, 3)
    edges = []
    nxt = 6
    for u, v in sorted(base.edges):
        edges += [(u, nxt), (nxt, v)]
        nxt += 1
    edges += [(0, nxt), (nxt, nxt + 1)]
    g = Graph(range(nxt + 2), edges)
    res = planarity(g)
    assert not res.planar and res.witness.kind == "K33"
    assert verify_kuratowski(g, res.witness) == []


def test_verify_kuratowski_flags_corruption():
    res = planarity(complete_graph(5))
    w = res.witness
    # break one path: claim a route that skips the middle vertex
    (e0, p0), *rest = w.paths
    bad = KuratowskiWitness(w.kind, w.branch_vertices, ((e0, p0[:1] + p0[-1:]), *rest))
    host = complete_graph(5).remove_edges([tuple(sorted((p0[0], p0[-1])))])
    assert verify_kuratowski(host, bad) != []
    # wrong branch count
    bad2 = KuratowskiWitness("K5", w.branch_vertices[:4], w.paths)
    assert verify_kuratowski(complete_graph(5), bad2) != []


def test_planarity_matches_oracle_random(rng):
    for trial in range(150):
        g = random_graph(rng, rng.randrange(1, 8), 0.45)
        res = planarity(g)
        assert res.planar == planar_by_subdivision(g)
        if res.planar:
            assert genus_of_rotation(g, res.rotation) == 0
        else:
            assert verify_kuratowski(g, res.witness) == []


def test_handle_merge_bound_holds():
    a = complete_graph(4)
    b = complete_graph(4)
    ra, rb = _planar_rotation(a), _planar_rotation(b)
    merged = handle_merge(a, ra, b, rb, [(0, 0), (1, 1)])
    validate_rotation(merged.graph, merged.rotation)
    assert genus_of_rotation(merged.graph, merged.rotation) <= merged.genus_bound
    assert merged.genus_bound == 2
    # identified pairs collapse into single vertices
    assert merged.graph.n == 6
