"""Acceptance suite: every guarantee the package advertises, measured
end to end with pinned thresholds.

Statistical thresholds are the guaranteed success probability minus
three binomial standard errors at the trial count used, so a correct
implementation fails any single criterion with probability well under
1e-3.
"""

import json
import math
import time

import pytest

from localcut import _kernel_py
from localcut.cli import main as cli_main
from localcut.generators import (
    circulant,
    clique,
    cycle,
    fig5_instance,
    low_degree_circulant,
    pendant_instance,
    planted_far_edge,
    planted_far_edge_bounded,
    planted_far_vertex,
    planted_far_vertex_bounded,
    random_digraph,
    random_undirected,
    two_clique_instance,
    undirected_clique,
)
from localcut.global_vc import exact_vertex_connectivity_search
from localcut.graph import (
    DirectedGraph,
    cut_size,
    is_separation_triple,
    out_neighborhood,
    sparse_certificate,
    vol_out,
)
from localcut.kecs import max_kecs_directed, max_kecs_undirected
from localcut.kernel import STATUS_CUT, local_ec_run
from localcut.local_ec import (
    RANGE_DEN,
    local_ec,
    local_ec_alt,
    mark_cap,
)
from localcut.local_vc import local_vc, reconstruct_separation
from localcut.oracle import (
    brute_max_kecs,
    exact_edge_connectivity,
    exact_vertex_connectivity,
)
from localcut.rng import SplitMix64, bernoulli_threshold, derive_seed
from localcut.testing import (
    TesterConfig,
    test_k_edge_bounded as edge_bounded,
    test_k_edge_unbounded as edge_unbounded,
    test_k_vertex_bounded as vertex_bounded,
    test_k_vertex_unbounded as vertex_unbounded,
)


def three_se(p, n):
    return 3 * math.sqrt(p * (1 - p) / n)


# --------------------------------------------------------------------------
# 1. Local edge-cut soundness: every non-bot output is a genuine small,
#    low-volume cut around the seed, within the mark cap.  >= 10^4 runs.
# --------------------------------------------------------------------------

def test_01_local_ec_soundness():
    start = time.time()
    zoo = [
        pendant_instance(),
        two_clique_instance(small=3, big=20),
        clique(12),
        cycle(24),
        circulant(30, [1, 2, 3]),
    ]
    for t in range(40):
        zoo.append(random_digraph(10 + t % 15, 45 + 2 * t, 100 + t))
        zoo.append(random_undirected(10 + t % 15, 25 + t, 200 + t))
    runs = 0
    t = 0
    while runs < 10_000:
        g = zoo[t % len(zoo)]
        k = 1 + t % 3
        gamma = t % (k + 1)
        nu = k + 1 + t % 6
        x = (7 * t) % g.n
        out = local_ec(g, x, nu, k, gamma, derive_seed(1, t), strict=False)
        runs += 1
        t += 1
        assert out.marked <= mark_cap(nu, k, gamma)
        if out.found:
            side = out.cut_side
            assert x in side
            assert 0 < len(side) < g.n
            assert cut_size(g, side) < k + gamma
            assert vol_out(g, side) <= RANGE_DEN * nu * k / (gamma + 1)
    assert runs >= 10_000
    assert time.time() - start < 30


# --------------------------------------------------------------------------
# 2. Local edge-cut detection on the pendant instance under the strict
#    parameter range: non-bot rate >= 0.75 - 3SE over 2000 trials, and the
#    budgeted variant clears 0.5 - 3SE.
# --------------------------------------------------------------------------

def test_02_pendant_detection_rates():
    g = pendant_instance()
    x, nu, k, gamma = 31, 3, 2, 0
    # strict range must genuinely hold for this instance
    assert gamma <= k < nu < g.m * (gamma + 1) / (RANGE_DEN * k)

    trials = 2000
    hits = sum(local_ec(g, x, nu, k, gamma, derive_seed(2, t)).found
               for t in range(trials))
    assert hits / trials >= 0.75 - three_se(0.75, trials)

    alt_hits = sum(
        local_ec_alt(g, x, nu, k, eps=0.5, seed=derive_seed(3, t),
                     strict=False).found
        for t in range(trials))
    assert alt_hits / trials >= 0.5 - three_se(0.5, trials)


# --------------------------------------------------------------------------
# 3. Path reversal changes |E(S, V-S)| and vol_out(S) by exactly one when
#    the path leaves S, and not at all when it returns: 10^4 random cases.
# --------------------------------------------------------------------------

def _random_simple_path(g, x, rng):
    path = []
    v = x
    visited = {x}
    while True:
        nexts = [(a, h) for a, h in _out_arcs_with_ids(g, v)
                 if h not in visited]
        if not nexts or (path and rng.below(3) == 0):
            return path
        arc_id, h = nexts[rng.below(len(nexts))]
        path.append(arc_id)
        visited.add(h)
        v = h


def _out_arcs_with_ids(g, v):
    return [(a, int(g.heads[a]))
            for a in range(int(g.indptr[v]), int(g.indptr[v + 1]))]


def test_03_path_reversal_exact_change():
    rng = SplitMix64(314159)
    cases = 0
    while cases < 10_000:
        g = random_digraph(8 + rng.below(6), 30 + rng.below(20),
                           rng.next_u64() % 100000)
        if g.m == 0:
            continue
        x = rng.below(g.n)
        path = _random_simple_path(g, x, rng)
        if not path:
            continue
        y = int(g.heads[path[-1]])
        side = {x}
        for v in range(g.n):
            if v not in (x, y) and rng.below(2):
                side.add(v)
        if rng.below(2) and y != x:
            side.add(y)

        arcs = list(zip(g.tails.tolist(), g.heads.tolist()))
        for a in path:
            u, w = arcs[a]
            arcs[a] = (w, u)
        g2 = DirectedGraph.from_arcs(g.n, arcs)

        before_cut, after_cut = cut_size(g, side), cut_size(g2, side)
        before_vol, after_vol = vol_out(g, side), vol_out(g2, side)
        if y in side:
            assert after_cut == before_cut
            assert after_vol == before_vol
        else:
            assert after_cut == before_cut - 1
            assert after_vol == before_vol - 1
        cases += 1


# --------------------------------------------------------------------------
# 4. Split-graph correspondence: embedding a separation triple yields a
#    split cut of exactly |S| with the volume sandwich, and every
#    reconstruction satisfies the reverse bounds.
# --------------------------------------------------------------------------

def _split_side_of_triple(g, x, left, sep):
    members = {2 * x}
    for v in left:
        if v != x:
            members.add(2 * v)
            members.add(2 * v + 1)
    for v in sep:
        members.add(2 * v)
    return members


def _split_cut_and_vol(g, x, members):
    from localcut.local_vc import _split_cut_arcs
    cut, _s2, vol = _split_cut_arcs(g, x, members)
    return cut, vol


def test_04_split_graph_correspondence():
    rng = SplitMix64(2718)
    checked_forward = 0
    while checked_forward < 200:
        g = random_digraph(9, 30, rng.next_u64() % 100000)
        x = rng.below(g.n)
        left = {x}
        for v in range(g.n):
            if v != x and rng.below(3) == 0:
                left.add(v)
        sep = out_neighborhood(g, left)
        right = set(range(g.n)) - left - sep
        if not right:
            continue
        cut, vol = _split_cut_and_vol(g, x, _split_side_of_triple(
            g, x, left, sep))
        assert cut == len(sep)
        assert vol_out(g, left) <= vol <= 3 * max(vol_out(g, left), 1)
        checked_forward += 1

    # reconstruction bounds on genuine kernel outputs
    checked_back = 0
    t = 0
    while checked_back < 200 and t < 4000:
        t += 1
        g = random_digraph(10, 36, 50_000 + t)
        x = t % g.n
        nu = 6
        k, gamma = 3, 1
        status, members, _q, _m = local_ec_run(
            g.indptr, g.heads, g.n, True, x, 2 * x, k + gamma,
            mark_cap(3 * nu, k, gamma),
            bernoulli_threshold(gamma + 1, 24 * nu), derive_seed(4, t))
        if status != STATUS_CUT:
            continue
        triple, split_cut, split_vol = reconstruct_separation(g, x, members)
        if triple is None:
            continue
        assert is_separation_triple(g, triple.left, triple.cut, triple.right)
        assert len(triple.cut) <= split_cut
        assert vol_out(g, triple.left) <= 2 * split_vol
        checked_back += 1
    assert checked_back >= 200


# --------------------------------------------------------------------------
# 5. Local vertex-cut detection on the two-clique instance: rate
#    >= 0.75 - 3SE over 2000 trials; every returned cut disconnects.
# --------------------------------------------------------------------------

def test_05_two_clique_detection():
    start = time.time()
    g = two_clique_instance(small=4, big=700)
    x, nu, k, gamma = 0, 30, 2, 0
    trials = 2000
    hits = 0
    for t in range(trials):
        out = local_vc(g, x, nu, k, gamma, derive_seed(5, t), strict=False)
        if out.found:
            hits += 1
            tr = out.triple
            assert is_separation_triple(g, tr.left, tr.cut, tr.right)
            assert len(tr.cut) <= k + gamma
    assert hits / trials >= 0.75 - three_se(0.75, trials)
    assert time.time() - start < 60


# --------------------------------------------------------------------------
# 6. Global vertex connectivity agrees with the exhaustive oracle on 300
#    random graphs; every emitted separator is valid.
# --------------------------------------------------------------------------

def test_06_global_vc_exactness():
    agree = 0
    total = 0
    rng = SplitMix64(606)
    for t in range(150):
        n = 8 + t % 33
        g = random_digraph(n, 3 * n + t % 20, 60_000 + t)
        total += 1
        agree += _vc_case(g, derive_seed(6, t))
    for t in range(150):
        n = 8 + t % 33
        g = random_undirected(n, 2 * n + t % 15, 61_000 + t)
        total += 1
        agree += _vc_case(g, derive_seed(7, t))
    assert agree / total >= 0.99


def _vc_case(g, seed):
    kappa, triple = exact_vertex_connectivity_search(g, seed)
    if triple is not None:
        assert is_separation_triple(g, triple.left, triple.cut, triple.right)
        assert len(triple.cut) == kappa
    return int(kappa == exact_vertex_connectivity(g)[0])


# --------------------------------------------------------------------------
# 7. Tester one-sidedness: on verified k-connected instances all four
#    testers accept in 100% of >= 500 trials each.
# --------------------------------------------------------------------------

def test_07_tester_one_sidedness():
    instances = [
        (clique(9), 3),
        (undirected_clique(8), 3),
        (circulant(14, [1, 2, 3]), 3),  # lambda = kappa = 3
    ]
    for g, k in instances:
        assert exact_edge_connectivity(g)[0] >= k
        assert exact_vertex_connectivity(g)[0] >= k
    d = max(max(g.out_degree(v) for v in range(g.n)) for g, _ in instances)
    for g, k in instances:
        for fn, bounded in ((edge_unbounded, False),
                            (vertex_unbounded, False),
                            (edge_bounded, True),
                            (vertex_bounded, True)):
            cfg = TesterConfig(k=k, eps=0.3, d=d if bounded else None)
            for t in range(500):
                verdict = fn(g, cfg, derive_seed(8, t))
                assert verdict.accepted
                assert verdict.queries <= verdict.budget


# --------------------------------------------------------------------------
# 8. Tester detection: on generator-certified eps-far instances each
#    tester rejects at rate >= 2/3 - 3SE over >= 500 trials.
# --------------------------------------------------------------------------

def test_08_tester_detection():
    from localcut.testing import verify_far_certificate
    cases = [
        (edge_unbounded, planted_far_edge(), "edge", None),
        (vertex_unbounded, planted_far_vertex(), "vertex", None),
        (edge_bounded, planted_far_edge_bounded(), "edge", 8),
        (vertex_bounded, planted_far_vertex_bounded(), "vertex", 8),
    ]
    trials = 500
    for fn, inst, kind, d in cases:
        assert verify_far_certificate(inst.graph, kind, inst.k, inst.eps,
                                      inst.certificate, d=d)
        cfg = TesterConfig(k=inst.k, eps=inst.eps, d=d)
        rejected = 0
        for t in range(trials):
            verdict = fn(inst.graph, cfg, derive_seed(9, t))
            assert verdict.queries <= verdict.budget
            if not verdict.accepted:
                rejected += 1
                assert verdict.witness is not None
        assert rejected / trials >= 2 / 3 - three_se(2 / 3, trials)


# --------------------------------------------------------------------------
# 9. Query budgets: measured queries never exceed the closed-form budget,
#    and mean queries scale linearly in k (consecutive-doubling ratio in
#    [1.5, 2.5]) on a fixed-eps far family.
# --------------------------------------------------------------------------

def test_09_query_budget_and_scaling():
    means = []
    for k in (2, 4, 8, 16):
        g = low_degree_circulant(k, n=512)
        cfg = TesterConfig(k=k, eps=0.05)
        queries = []
        for t in range(200):
            verdict = edge_unbounded(g, cfg, derive_seed(10, 1000 * k + t))
            assert verdict.queries <= verdict.budget
            assert not verdict.accepted
            queries.append(verdict.queries)
        means.append(sum(queries) / len(queries))
    for lo, hi in zip(means, means[1:]):
        assert 1.5 <= hi / lo <= 2.5


# --------------------------------------------------------------------------
# 10. Maximal k-edge-connected subgraphs match the brute-force partition
#     on 200 random graphs; the canonical 7-vertex instance is exact; the
#     result is seed-independent (Las Vegas).
# --------------------------------------------------------------------------

def _canon(parts):
    return sorted(tuple(sorted(p)) for p in parts)


def test_10_kecs_correctness():
    g5 = fig5_instance()
    expected = [(0, 1, 2, 3), (4,), (5,), (6,)]
    assert _canon(max_kecs_undirected(g5, 3, seed=7).parts) == expected
    assert _canon(max_kecs_directed(g5, 3, seed=7).parts) == expected

    for t in range(100):
        n = 8 + t % 11
        g = random_digraph(n, 3 * n, 70_000 + t)
        k = 2 + t % 3
        want = _canon(brute_max_kecs(g, k))
        a = _canon(max_kecs_directed(g, k, derive_seed(11, t)).parts)
        b = _canon(max_kecs_directed(g, k, derive_seed(12, t)).parts)
        assert a == want and b == want

    for t in range(100):
        n = 8 + t % 11
        g = random_undirected(n, 2 * n, 71_000 + t)
        k = 2 + t % 3
        want = _canon(brute_max_kecs(g, k))
        a = _canon(max_kecs_undirected(g, k, derive_seed(13, t)).parts)
        b = _canon(max_kecs_undirected(g, k, derive_seed(14, t)).parts)
        assert a == want and b == want


# --------------------------------------------------------------------------
# 11. Sparse certificates preserve edge connectivity up to k with at most
#     k(n-1) undirected edges.
# --------------------------------------------------------------------------

def test_11_sparse_certificate():
    for t in range(50):
        n = 7 + t % 10
        g = random_undirected(n, 3 * n, 72_000 + t)
        lam = exact_edge_connectivity(g)[0]
        for k in (1, 2, 3):
            cert = sparse_certificate(g, k)
            assert exact_edge_connectivity(cert)[0] == min(k, lam)
            assert cert.m // 2 <= k * (g.n - 1)


# --------------------------------------------------------------------------
# 12. CLI determinism: identical invocations produce byte-identical JSON.
# --------------------------------------------------------------------------

def test_12_cli_determinism(tmp_path, capsys):
    graph_path = tmp_path / "g.txt"
    assert cli_main(["gen", "pendant", "-o", str(graph_path)]) == 0
    capsys.readouterr()
    invocations = [
        ["trials", str(graph_path), "--x", "31", "--k", "2", "--nu", "3",
         "--trials", "100", "--seed", "77"],
        ["vc", str(graph_path), "--seed", "3"],
        ["kecs", str(graph_path), "--k", "2", "--seed", "4"],
        ["test-conn", str(graph_path), "--k", "2", "--eps", "0.3",
         "--seed", "5"],
        ["local-ec", str(graph_path), "--x", "31", "--nu", "3", "--k", "2",
         "--seed", "6"],
    ]
    for argv in invocations:
        assert cli_main(argv) == 0
        first = capsys.readouterr().out.encode()
        assert cli_main(argv) == 0
        second = capsys.readouterr().out.encode()
        assert first == second
        json.loads(first)  # well-formed
