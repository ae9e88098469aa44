import pytest

from localcut.generators import random_digraph
from localcut.graph import DirectedGraph
from localcut.rng import SplitMix64
from localcut.view import LocalView


def path_graph():
    return DirectedGraph.from_arcs(4, [(0, 1), (1, 2), (2, 3)])


def test_queries_charge_once_per_arc():
    g = path_graph()
    view = LocalView(g)
    a = view.first_arc(0)
    assert view.queries == 1
    view.first_arc(0)
    assert view.queries == 1  # repeat fetch is free
    assert view.next_arc(a) is None
    assert view.queries == 1  # end-of-list probe is free


def test_reverse_tree_path_flips_arcs():
    g = path_graph()
    view = LocalView(g)
    arcs = []
    v = 0
    while v != 3:
        arc = view.first_arc(v)
        arcs.append(arc)
        v = arc.head
    view.reverse_tree_path(arcs)
    assert view.arc_multiset() == [(1, 0), (2, 1), (3, 2)]


def test_reverse_requires_marked_and_path():
    g = path_graph()
    view = LocalView(g)
    a0 = view.first_arc(0)
    a2 = view.first_arc(2)
    with pytest.raises(ValueError):
        view.reverse_tree_path([a0, a2])  # not contiguous


def test_base_arrays_never_mutated():
    g = random_digraph(30, 120, 5)
    before = (g.indptr.copy(), g.heads.copy(), g.tails.copy())
    view = LocalView(g)
    rng = SplitMix64(99)
    for _ in range(200):
        v = rng.below(g.n)
        arc = view.first_arc(v)
        if arc is not None:
            view.reverse_arc(arc)
    assert (g.indptr == before[0]).all()
    assert (g.heads == before[1]).all()
    assert (g.tails == before[2]).all()


def test_reversal_preserves_arc_multiset_as_edges():
    g = random_digraph(15, 60, 7)
    view = LocalView(g)
    base = sorted(zip(g.tails.tolist(), g.heads.tolist()))
    rng = SplitMix64(3)
    flipped = 0
    for _ in range(100):
        arc = view.first_arc(rng.below(g.n))
        if arc is not None:
            view.reverse_arc(arc)
            flipped += 1
    assert flipped > 0
    assert len(view.arc_multiset()) == len(base)
