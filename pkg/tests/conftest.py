"""Shared fixtures: the exhaustive small-graph corpus and a seeded RNG."""

from __future__ import annotations

import random

import pytest

from oracles import connected_graphs_on, graphs_on


@pytest.fixture(scope="session")
def graphs_le7():
    """One representative per isomorphism class, 1 to 7 vertices."""
    corpus = [g for n in range(1, 8) for g in graphs_on(n)]
    # known class counts: 1, 2, 4, 11, 34, 156, 1044
    assert len(corpus) == 1252
    return corpus


@pytest.fixture(scope="session")
def graphs_7():
    corpus = graphs_on(7)
    assert len(corpus) == 1044
    return corpus


@pytest.fixture(scope="session")
def connected_le7():
    corpus = [g for n in range(1, 8) for g in connected_graphs_on(n)]
    assert len(corpus) == 996
    return corpus


@pytest.fixture()
def rng():
    return random.Random(0x5EED)
