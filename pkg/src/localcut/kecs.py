"""Maximal k-edge-connected subgraph decomposition.

Removing the boundary of any vertex set with an edge cut below k never
splits a k-edge-connected subgraph, so every cut found may be peeled off
immediately and the final partition does not depend on randomness
(Las Vegas).  Small components use a capped global cut sweep; large ones
are peeled by boosted local cut searches seeded from a FIFO worklist, the
directed scheme on the graph and its reverse, the undirected scheme on a
sparse certificate that is recomputed after each removal.
"""

import math
from collections import deque
from dataclasses import dataclass, field

from .graph import (
    PreconditionError,
    cut_arcs,
    cut_size,
    sparse_certificate,
    strongly_connected_components,
)
from .local_ec import local_ec_boosted
from .maxflow import st_edge_cut_capped
from .rng import SplitMix64

BASELINE_FACTOR = 130   # components with m <= 130*nu*k skip the peeling


@dataclass
class KecsResult:
    parts: list
    k: int
    volume_scale: int
    local_cuts: int = 0
    global_cuts: int = 0
    stats: dict = field(default_factory=dict)


def global_small_cut(graph, k):
    """(cut_arc_ids, source_side) for some edge cut below k, or None when
    the graph is k-edge-connected.  Root sweep: capped flows between a
    fixed root and every other vertex, both directions."""
    r = 0
    for v in range(1, graph.n):
        for s, t in ((r, v), (v, r)):
            res = st_edge_cut_capped(graph, s, t, k)
            if not res.capped:
                return res.cut_arcs, res.source_side
    return None


def _boost_reps(n):
    return max(1, math.ceil(math.log2(3 * max(n, 2))))


def _crossing_endpoints(graph, inside):
    """Vertices outside ``inside`` incident to a crossing arc."""
    inside = set(inside)
    ends = []
    for a in range(graph.m):
        u, v = int(graph.tails[a]), int(graph.heads[a])
        if (u in inside) != (v in inside):
            ends.append(v if u in inside else u)
    return ends


def max_kecs_directed(graph, k, seed, nu=None):
    """Partition of the vertex set into maximal k-edge-connected subgraphs
    (vertex sets of size >= 2) and leftover singletons."""
    if k < 1:
        raise PreconditionError("k must be at least 1")
    rng = SplitMix64(seed)
    if nu is None:
        nu = max(1, math.isqrt(max(graph.m, 1) // max(k, 1)) + 1)
    threshold = BASELINE_FACTOR * nu * k
    result = KecsResult(parts=[], k=k, volume_scale=nu)
    work = [(graph, list(range(graph.n)))]
    while work:
        g, ids = work.pop()
        comps = strongly_connected_components(g)
        if len(comps) > 1:
            for comp in comps:
                sub, old = g.induced_subgraph(comp)
                work.append((sub, [ids[v] for v in old]))
            continue
        if g.n == 1:
            result.parts.append((ids[0],))
            continue
        if g.m <= threshold:
            found = global_small_cut(g, k)
            if found is None:
                result.parts.append(tuple(sorted(ids)))
            else:
                result.global_cuts += 1
                work.append((g.without_arcs(found[0]), ids))
            continue
        _peel_directed(g, ids, k, nu, rng, result, work)
    result.parts.sort()
    return result


def _peel_directed(g, ids, k, nu, rng, result, work):
    queue = deque(ids)
    pos = {orig: local for local, orig in enumerate(ids)}
    cur, cur_ids = g, ids
    while queue:
        ox = queue.popleft()
        if ox not in pos:
            continue
        x = pos[ox]
        reps = _boost_reps(cur.n)
        peeled = None
        for directed_g in (cur, cur.reverse()):
            out = local_ec_boosted(directed_g, x, nu, k, 0, reps,
                                   rng.next_u64(), strict=False)
            if out.found and out.cut_value < k:
                peeled = set(int(v) for v in out.cut_side)
                break
        if peeled is None:
            continue
        # peeled is cut off by < k arcs in one direction: safe to remove
        for w in _crossing_endpoints(cur, peeled):
            queue.append(cur_ids[w])
        sub, old = cur.induced_subgraph(sorted(peeled))
        work.append((sub, [cur_ids[v] for v in old]))
        result.local_cuts += 1
        rest = [v for v in range(cur.n) if v not in peeled]
        cur, old = cur.induced_subgraph(rest)
        cur_ids = [cur_ids[v] for v in old]
        pos = {orig: local for local, orig in enumerate(cur_ids)}
        if cur.n <= 1:
            break
    if cur.n == 1:
        result.parts.append((cur_ids[0],))
    elif cur.n:
        found = global_small_cut(cur, k)
        if found is None:
            result.parts.append(tuple(sorted(cur_ids)))
        else:
            result.global_cuts += 1
            work.append((cur.without_arcs(found[0]), cur_ids))


def max_kecs_undirected(graph, k, seed, sigma=None):
    """Undirected decomposition working on a sparse certificate; removals
    always happen on the true graph and the certificate is rebuilt after
    every peel."""
    if k < 1:
        raise PreconditionError("k must be at least 1")
    if not graph.undirected_origin:
        raise PreconditionError("undirected scheme needs an undirected graph")
    rng = SplitMix64(seed)
    if sigma is None:
        sigma = max(1, math.isqrt(max(graph.n, 1) // max(k, 1)) + 1)
    nu = 2 * k * sigma
    threshold = BASELINE_FACTOR * nu * k
    result = KecsResult(parts=[], k=k, volume_scale=sigma)
    work = [(graph, list(range(graph.n)))]
    while work:
        g, ids = work.pop()
        comps = strongly_connected_components(g)  # connected components
        if len(comps) > 1:
            for comp in comps:
                sub, old = g.induced_subgraph(comp)
                work.append((sub, [ids[v] for v in old]))
            continue
        if g.n == 1:
            result.parts.append((ids[0],))
            continue
        cert = sparse_certificate(g, k)
        if cert.m <= threshold:
            _settle_undirected(g, cert, ids, k, result, work)
            continue
        _peel_undirected(g, ids, k, nu, rng, result, work)
    result.parts.sort()
    return result


def _remove_undirected_boundary(g, side):
    """Remove every arc crossing the bipartition, both directions."""
    side = set(side)
    drop = [a for a in range(g.m)
            if (int(g.tails[a]) in side) != (int(g.heads[a]) in side)]
    return g.without_arcs(drop)


def _settle_undirected(g, cert, ids, k, result, work):
    found = global_small_cut(cert, k)
    if found is None:
        result.parts.append(tuple(sorted(ids)))
        return
    result.global_cuts += 1
    side = [v for v in found[1]]
    work.append((_remove_undirected_boundary(g, side), ids))


def _peel_undirected(g, ids, k, nu, rng, result, work):
    queue = deque(ids)
    pos = {orig: local for local, orig in enumerate(ids)}
    cur, cur_ids = g, ids
    cert = sparse_certificate(cur, k)
    while queue:
        ox = queue.popleft()
        if ox not in pos:
            continue
        x = pos[ox]
        reps = _boost_reps(cur.n)
        out = local_ec_boosted(cert, x, nu, k, 0, reps,
                               rng.next_u64(), strict=False)
        if not (out.found and out.cut_value < k):
            continue
        peeled = set(int(v) for v in out.cut_side)
        if cut_size(cur, peeled) >= k:
            continue  # certificate cut must survive on the true graph
        for w in _crossing_endpoints(cur, peeled):
            queue.append(cur_ids[w])
        sub, old = cur.induced_subgraph(sorted(peeled))
        work.append((sub, [cur_ids[v] for v in old]))
        result.local_cuts += 1
        rest = [v for v in range(cur.n) if v not in peeled]
        cur, old = cur.induced_subgraph(rest)
        cur_ids = [cur_ids[v] for v in old]
        pos = {orig: local for local, orig in enumerate(cur_ids)}
        if cur.n <= 1:
            break
        cert = sparse_certificate(cur, k)
    if cur.n == 1:
        result.parts.append((cur_ids[0],))
    elif cur.n:
        _settle_undirected(cur, sparse_certificate(cur, k), cur_ids,
                           k, result, work)
