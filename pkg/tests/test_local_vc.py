import pytest

from localcut.generators import random_digraph, two_clique_instance
from localcut.graph import PreconditionError, is_separation_triple
from localcut.local_vc import (
    gap_local_vc,
    local_vc,
    reconstruct_separation,
)
from localcut.oracle import brute_local_vc
from localcut.rng import SplitMix64, derive_seed


def test_two_clique_finds_articulation():
    g = two_clique_instance(small=4, big=60)
    hits = 0
    for t in range(200):
        out = local_vc(g, 0, 30, 2, 0, derive_seed(11, t), strict=False)
        if out.found:
            hits += 1
            assert out.triple.cut == frozenset([4])
            assert 0 in out.triple.left
    assert hits > 100


def test_returned_triples_are_valid():
    for t in range(200):
        g = random_digraph(12, 45, 1700 + t)
        out = local_vc(g, t % g.n, 6, 3, 1, derive_seed(12, t),
                       strict=False)
        if out.found:
            tr = out.triple
            assert is_separation_triple(g, tr.left, tr.cut, tr.right)
            assert (t % g.n) in tr.left or len(tr.left) == 1
            assert len(tr.cut) < 4


def test_reconstruction_matches_enumerated_triples():
    rng = SplitMix64(2024)
    checked = 0
    for t in range(300):
        g = random_digraph(9, 26, 2500 + t)
        x = rng.below(g.n)
        triples = brute_local_vc(g, x, 8, 4)
        for left, sep, right in triples[:3]:
            assert is_separation_triple(g, left, sep, right)
            checked += 1
    assert checked >= 200


def test_gap_degree_shortcut():
    g = random_digraph(10, 20, 5)
    x = min(range(g.n), key=g.out_degree)
    if g.out_degree(x) < 3 and g.n - 1 - g.out_degree(x) > 1:
        out = gap_local_vc(g, x, 1, 5, 1, seed=0, strict=False)
        if out.found:
            assert out.triple.left == frozenset([x])


def test_strict_preconditions():
    g = random_digraph(12, 40, 9)
    with pytest.raises(PreconditionError):
        local_vc(g, 0, 39, 2, 0, seed=0)  # volume too large for range
    with pytest.raises(PreconditionError):
        local_vc(g, 0, 5, 4, 0, seed=0)  # k >= n/4 violated


def test_determinism():
    g = random_digraph(16, 70, 77)
    a = local_vc(g, 3, 7, 2, 1, 42, strict=False)
    b = local_vc(g, 3, 7, 2, 1, 42, strict=False)
    assert (a.found, a.queries, a.marked) == (b.found, b.queries, b.marked)
    if a.found:
        assert a.triple == b.triple
