import math

import pytest
from hypothesis import given, settings, strategies as st

from localcut.generators import pendant_instance, random_digraph
from localcut.graph import PreconditionError, cut_size, vol_out
from localcut.local_ec import (
    RANGE_DEN,
    gap_local_ec,
    local_ec,
    local_ec_alt,
    local_ec_boosted,
    mark_cap,
)
from localcut.rng import derive_seed


def run_relaxed(graph, x, nu, k, gamma, seed):
    return local_ec(graph, x, nu, k, gamma, seed, strict=False)


def test_pendant_strict_preconditions_hold():
    g = pendant_instance()
    x, nu, k, gamma = 31, 3, 2, 0
    assert gamma <= k < nu < g.m * (gamma + 1) / (RANGE_DEN * k)
    out = local_ec(g, x, nu, k, gamma, seed=1)
    if out.found:
        assert x in out.cut_side
        assert cut_size(g, out.cut_side) < k + gamma


def test_found_cut_properties_randomized():
    violations = 0
    for t in range(300):
        g = random_digraph(12, 40, 900 + t)
        out = run_relaxed(g, t % g.n, 5, 2, 1, derive_seed(7, t))
        assert out.marked <= mark_cap(5, 2, 1)
        assert out.queries <= out.marked + 3
        if out.found:
            side = out.cut_side
            if (t % g.n) not in side or len(side) >= g.n:
                violations += 1
            if cut_size(g, side) >= 3:
                violations += 1
            if vol_out(g, side) > RANGE_DEN * 5 * 2 / 2:
                violations += 1
    assert violations == 0


def test_strict_preconditions_rejected():
    g = random_digraph(10, 30, 1)
    with pytest.raises(PreconditionError):
        local_ec(g, 0, 29, 2, 0, seed=0)  # nu too large for m
    with pytest.raises(PreconditionError):
        local_ec(g, 0, 1, 2, 0, seed=0)  # nu <= k
    with pytest.raises(PreconditionError):
        local_ec(g, 0, 5, 2, 3, seed=0)  # gamma > k


def test_boosted_beats_single_run():
    g = pendant_instance()
    single = sum(
        local_ec(g, 31, 3, 2, 0, derive_seed(5, t)).found
        for t in range(400))
    boosted = sum(
        local_ec_boosted(g, 31, 3, 2, 0, reps=5,
                         seed=derive_seed(6, t)).found
        for t in range(400))
    assert boosted >= single


def test_gap_variant_degree_shortcut():
    g = pendant_instance()
    # vertex 31 has out-degree 1 < k - gamma when nu < k - gamma
    out = gap_local_ec(g, 31, 1, 4, 1, seed=0, strict=False)
    assert out.found and out.cut_side == frozenset([31])


def test_alt_variant_detects_pendant():
    g = pendant_instance()
    hits = sum(
        local_ec_alt(g, 31, 3, 2, eps=0.5, seed=derive_seed(8, t),
                     strict=False).found
        for t in range(300))
    assert hits > 100


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2 ** 32), st.integers(6, 14), st.integers(1, 3))
def test_invariants_hypothesis(seed, n, k):
    g = random_digraph(n, 4 * n, seed % 100000)
    nu = k + 2
    out = run_relaxed(g, seed % n, nu, k, 0, seed)
    assert out.marked <= mark_cap(nu, k, 0)
    assert out.queries <= out.marked + k
    if out.found:
        assert cut_size(g, out.cut_side) < k
        assert (seed % n) in out.cut_side
        assert len(out.cut_side) < g.n


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_base_arrays_untouched(seed):
    g = random_digraph(10, 35, seed % 977)
    heads = g.heads.copy()
    indptr = g.indptr.copy()
    run_relaxed(g, seed % 10, 4, 2, 0, seed)
    assert (g.heads == heads).all()
    assert (g.indptr == indptr).all()


def test_determinism_same_seed():
    g = random_digraph(20, 80, 3)
    a = run_relaxed(g, 4, 6, 2, 1, 555)
    b = run_relaxed(g, 4, 6, 2, 1, 555)
    assert (a.found, a.cut_side, a.queries, a.marked) == \
        (b.found, b.cut_side, b.queries, b.marked)
