"""Capped unit-capacity s-t cuts via shortest augmenting paths."""

from dataclasses import dataclass

import numpy as np

from .graph import PreconditionError
from .kernel import max_flow_capped


@dataclass(frozen=True)
class StCutResult:
    """Outcome of a capped s-t cut computation.

    ``value`` is the flow reached.  When ``capped`` the true cut is only
    known to be >= cap.  For edge cuts ``cut_arcs`` are arc ids of the
    input graph and ``source_side`` the s-reachable residual set; for
    vertex cuts ``cut_vertices``/``source_side`` describe a separation
    triple and ``adjacent`` flags an s->t arc (no vertex cut exists).
    """

    value: int
    capped: bool
    cut_arcs: tuple = ()
    cut_vertices: tuple = ()
    source_side: tuple = ()
    adjacent: bool = False


def st_edge_cut_capped(graph, s, t, cap):
    """Min s-t edge cut if below cap, else a capped signal."""
    if s == t:
        raise PreconditionError("s and t must differ")
    if cap < 1:
        raise PreconditionError("cap must be positive")
    value, reachable = max_flow_capped(
        graph.n, graph.tails, graph.heads,
        np.ones(graph.m, dtype=np.int64), int(s), int(t), int(cap))
    if reachable is None:
        return StCutResult(value=value, capped=True)
    inside = set(reachable)
    arcs = tuple(a for a in range(graph.m)
                 if int(graph.tails[a]) in inside
                 and int(graph.heads[a]) not in inside)
    return StCutResult(value=value, capped=False, cut_arcs=arcs,
                       source_side=tuple(sorted(inside)))


def st_vertex_cut_capped(graph, s, t, cap):
    """Min s-t vertex cut if below cap.

    Every vertex other than s, t is split into an in/out pair joined by a
    unit arc; graph arcs get capacity n so a minimum cut consists of split
    arcs only.  An s->t arc makes the pair adjacent: no vertex cut
    separates them, reported via ``adjacent`` and treated as capped.
    """
    if s == t:
        raise PreconditionError("s and t must differ")
    if cap < 1:
        raise PreconditionError("cap must be positive")
    s, t = int(s), int(t)
    n = graph.n
    big = n + 1
    efrom, eto, ecap = [], [], []
    for v in range(n):
        if v in (s, t):
            continue
        efrom.append(2 * v)
        eto.append(2 * v + 1)
        ecap.append(1)
    for a in range(graph.m):
        u, v = int(graph.tails[a]), int(graph.heads[a])
        if u == v or v == s or u == t:
            continue
        if u == s and v == t:
            return StCutResult(value=cap, capped=True, adjacent=True)
        src = 2 * u + 1 if u != s else 2 * s + 1
        dst = 2 * v if v != t else 2 * t
        efrom.append(src)
        eto.append(dst)
        ecap.append(big)
    value, reachable = max_flow_capped(
        2 * n, np.asarray(efrom, dtype=np.int64),
        np.asarray(eto, dtype=np.int64), np.asarray(ecap, dtype=np.int64),
        2 * s + 1, 2 * t, int(cap))
    if reachable is None:
        return StCutResult(value=value, capped=True)
    inside = set(reachable)
    cut = tuple(sorted(v for v in range(n)
                       if v not in (s, t)
                       and 2 * v in inside and 2 * v + 1 not in inside))
    left = tuple(sorted([s] + [v for v in range(n)
                               if v not in (s, t) and 2 * v + 1 in inside]))
    return StCutResult(value=value, capped=False, cut_vertices=cut,
                       source_side=left)
