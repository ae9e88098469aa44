import pytest

from localcut.generators import (
    clique,
    cycle,
    pendant_instance,
    random_digraph,
    random_undirected,
    undirected_clique,
)


@pytest.fixture
def pendant():
    return pendant_instance()


@pytest.fixture
def k4():
    return clique(4)


def small_graph_zoo(seed=4242):
    """Mixed bag of small graphs for property checks."""
    zoo = [
        clique(5),
        undirected_clique(6),
        cycle(7),
        cycle(8, undirected=True),
        pendant_instance(core=8),
    ]
    for i in range(10):
        zoo.append(random_digraph(6 + i, 3 * (6 + i), seed + i))
        zoo.append(random_undirected(6 + i, 2 * (6 + i), seed + 100 + i))
    return [g for g in zoo if g.m > 0]
