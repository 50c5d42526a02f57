import random

import pytest

from skewwalk import OrientedGraph


@pytest.fixture
def triangle():
    return OrientedGraph(3, [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def transitive_tournament_4():
    return OrientedGraph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])


def random_oriented_graph(n, p, rng):
    """Random orientation of a G(n, p) underlying graph."""
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v) if rng.random() < 0.5 else (v, u))
    return OrientedGraph(n, edges)


def random_min_outdeg_graph(n, d, rng):
    """Random oriented graph with every out-degree at least d.

    Needs d well below n/2 so the greedy target sampling cannot wedge.
    """
    assert 1 <= d <= (n - 1) // 3
    edges = set()
    for u in range(n):
        candidates = [v for v in range(n) if v != u and (v, u) not in edges]
        for v in rng.sample(candidates, d):
            edges.add((u, v))
    return OrientedGraph(n, sorted(edges))


@pytest.fixture
def rng():
    return random.Random(20240811)
