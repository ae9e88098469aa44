import pytest

from localcut.generators import (
    circulant,
    clique,
    low_degree_circulant,
    planted_far_edge,
    planted_far_edge_bounded,
    planted_far_vertex,
    planted_far_vertex_bounded,
)
from localcut.graph import PreconditionError
from localcut.testing import (
    QueryAccess,
    TesterConfig,
    bounded_budget,
    sample_edge_regularized,
    test_k_edge_bounded as edge_bounded,
    test_k_edge_unbounded as edge_unbounded,
    test_k_vertex_bounded as vertex_bounded,
    test_k_vertex_unbounded as vertex_unbounded,
    unbounded_budget,
    verify_far_certificate,
)
from localcut.rng import SplitMix64


ALL_TESTERS = [
    (edge_unbounded, False),
    (vertex_unbounded, False),
    (edge_bounded, True),
    (vertex_bounded, True),
]


def test_query_access_counts_once():
    g = clique(4)
    access = QueryAccess(g)
    access.query(0, 0)
    access.query(0, 0)
    access.query(0, 1)
    assert access.query_count == 2
    head, virtual = access.query(0, 99)
    assert head is None and not virtual


def test_regularization_self_loops():
    g = circulant(6, [1])
    access = QueryAccess(g, d=4)
    head, virtual = access.query(0, 3)
    assert head == 0 and virtual
    head, virtual = access.query(0, 0)
    assert not virtual


def test_degree_bound_enforced():
    with pytest.raises(PreconditionError):
        QueryAccess(clique(6), d=3)


def test_edge_sampling_hits_real_and_virtual():
    g = circulant(8, [1, 2])
    access = QueryAccess(g, d=5)
    rng = SplitMix64(7)
    kinds = {sample_edge_regularized(access, rng)[2] for _ in range(200)}
    assert kinds == {True, False}


def test_certificates_verify():
    for inst in (planted_far_edge(), planted_far_edge_bounded()):
        assert verify_far_certificate(inst.graph, "edge", inst.k, inst.eps,
                                      inst.certificate, d=inst.degree_bound)
    for inst in (planted_far_vertex(), planted_far_vertex_bounded()):
        assert verify_far_certificate(inst.graph, "vertex", inst.k, inst.eps,
                                      inst.certificate, d=inst.degree_bound)


def test_bad_certificates_rejected():
    inst = planted_far_edge()
    overlapping = [inst.certificate[0], inst.certificate[0]]
    assert not verify_far_certificate(inst.graph, "edge", inst.k, inst.eps,
                                      overlapping)
    assert not verify_far_certificate(inst.graph, "edge", inst.k, 1.0,
                                      inst.certificate)


def test_one_sided_on_connected_inputs():
    g = clique(10)  # 9-edge- and 9-vertex-connected
    for fn, bounded in ALL_TESTERS:
        cfg = TesterConfig(k=3, eps=0.25, d=9 if bounded else None)
        for t in range(60):
            verdict = fn(g, cfg, 5000 + t)
            assert verdict.accepted
            assert verdict.queries <= verdict.budget


def test_far_instances_rejected_with_witness():
    cases = [
        (edge_unbounded, planted_far_edge(), None),
        (vertex_unbounded, planted_far_vertex(), None),
        (edge_bounded, planted_far_edge_bounded(), 8),
        (vertex_bounded, planted_far_vertex_bounded(), 8),
    ]
    for fn, inst, d in cases:
        cfg = TesterConfig(k=inst.k, eps=inst.eps, d=d)
        rejections = 0
        for t in range(60):
            verdict = fn(inst.graph, cfg, 6000 + t)
            assert verdict.queries <= verdict.budget
            if not verdict.accepted:
                rejections += 1
                assert verdict.witness is not None
        assert rejections >= 40


def test_budget_closed_form_monotone_in_k():
    for vertex in (False, True):
        prev = None
        for k in (2, 4, 8, 16):
            b = unbounded_budget(TesterConfig(k=k, eps=0.1), vertex=vertex)
            if prev is not None:
                assert b > prev
            prev = b
        prev = None
        for k in (2, 4, 8, 16):
            b = bounded_budget(TesterConfig(k=k, eps=0.1, d=32),
                               vertex=vertex)
            if prev is not None:
                assert b > prev
            prev = b


def test_simple_graph_shortcut():
    g = clique(12)
    cfg = TesterConfig(k=9, eps=0.9, simple_graph=True)
    verdict = edge_unbounded(g, cfg, 1)
    assert verdict.accepted and verdict.note == "simple_shortcut"


def test_low_degree_circulant_rejected_by_degree_phase():
    g = low_degree_circulant(4, n=64)
    cfg = TesterConfig(k=4, eps=0.1)
    verdict = edge_unbounded(g, cfg, 3)
    assert not verdict.accepted and verdict.note == "low_degree"


def test_strict_range_gate():
    g = clique(8)
    with pytest.raises(PreconditionError):
        edge_unbounded(g, TesterConfig(k=5, eps=0.2, strict=True), 0)
