"""Randomized local vertex cut search via the split-graph reduction.

Every vertex v other than the seed x is split into v_in -> v_out; each
arc (u, v) becomes (u_out, v_in).  The edge-cut kernel runs directly on
this encoding (computed arithmetically from the base CSR) with volume
parameter 3*nu, and a returned split set is folded back to a separation
triple (L, S, R) of the original graph with x in L and |S| < k + gamma.

Strict mode enforces 1 <= k < n/4 and
gamma <= k < nu < m*(gamma+1)/(12480*k).
"""

from dataclasses import dataclass

from .graph import (
    PreconditionError,
    SeparationTriple,
    is_separation_triple,
    out_neighborhood,
)
from .kernel import STATUS_CUT, local_ec_run
from .local_ec import _validate_common, mark_cap
from .rng import MASK64, bernoulli_threshold

VC_RANGE_DEN = 12480   # strict range: nu < m * (gamma + 1) / (12480 * k)
SPLIT_VOLUME_FACTOR = 3


@dataclass(frozen=True)
class VertexCutOutcome:
    """Result of one local vertex cut search."""

    found: bool
    triple: SeparationTriple | None
    cut_value: int | None
    status: str
    queries: int
    marked: int
    guarantee_void: bool

    @property
    def is_bot(self):
        return not self.found


def check_local_vc_preconditions(graph, x, nu, k, gamma):
    _validate_common(x, nu, k, gamma, graph.n)
    if not (4 * k < graph.n):
        raise PreconditionError(f"need k < n/4, got k={k}, n={graph.n}")
    if gamma > k:
        raise PreconditionError(f"need gamma <= k, got gamma={gamma}, k={k}")
    if not (k < nu):
        raise PreconditionError(f"need k < nu, got k={k}, nu={nu}")
    if not (nu * VC_RANGE_DEN * k < graph.m * (gamma + 1)):
        raise PreconditionError(
            f"need nu < m*(gamma+1)/({VC_RANGE_DEN}*k): "
            f"nu={nu}, m={graph.m}, k={k}, gamma={gamma}")


def _split_cut_arcs(graph, x, members):
    """Crossing arcs of the split set: returns (cut_value, s2, volume)
    where s2 holds base vertices whose in-node is the head of a crossing
    (u_out, v_in) arc and volume is the split out-volume of the set."""
    x2 = 2 * x
    cut = 0
    vol = 0
    s2 = set()
    for node in members:
        v = node >> 1
        if node == x2 or node & 1:
            deg = graph.out_degree(v)
            vol += deg
            for h in graph.out_arcs(v):
                h = int(h)
                if (h << 1) not in members:
                    cut += 1
                    s2.add(h)
        else:
            vol += 1
            if (node | 1) not in members:
                cut += 1
    return cut, s2, vol


def reconstruct_separation(graph, x, members):
    """Fold a split-graph cut side back to a separation triple.

    ``members`` is the set of split ids returned by the kernel (seed node
    included).  Returns (triple, split_cut_value, split_volume) or
    (None, split_cut_value, split_volume) when no vertex remains outside
    L and S.
    """
    members = set(int(v) for v in members)
    x2 = 2 * x
    cut, s2, vol = _split_cut_arcs(graph, x, members)

    closed = set(members)
    closed.update(v << 1 for v in s2)
    left = {v for v in range(graph.n)
            if (v << 1) in closed and (v == x or (v << 1 | 1) in closed)}
    if left:
        sep = out_neighborhood(graph, left)
        right = set(range(graph.n)) - left - sep
        if right:
            assert len(sep) <= cut
            return (SeparationTriple(frozenset(left), frozenset(sep),
                                     frozenset(right)), cut, vol)

    # degenerate shape: the closure swallowed the graph, but some in-member
    # vertex has no more out-arcs than the split cut, so its neighborhood
    # is itself a small separator (the seed need not be inside it)
    best = None
    for node in members:
        if node == x2 or node & 1:
            v = x if node == x2 else node >> 1
            if graph.out_degree(v) <= cut:
                if best is None or graph.out_degree(v) < graph.out_degree(best):
                    best = v
    if best is not None:
        single = {best}
        sep = out_neighborhood(graph, single)
        right = set(range(graph.n)) - single - sep
        if right:
            return (SeparationTriple(frozenset(single), frozenset(sep),
                                     frozenset(right)), cut, vol)
    return None, cut, vol


def local_vc(graph, x, nu, k, gamma, seed, strict=True):
    """Local vertex cut search; failure probability is at most 1/4 when a
    triple (L, S, R) with x in L, vol_out(L) <= nu and |S| < k exists."""
    guarantee_void = False
    if strict:
        check_local_vc_preconditions(graph, x, nu, k, gamma)
    else:
        _validate_common(x, nu, k, gamma, graph.n)
        try:
            check_local_vc_preconditions(graph, x, nu, k, gamma)
        except PreconditionError:
            guarantee_void = True
    nu_split = SPLIT_VOLUME_FACTOR * nu
    cap = mark_cap(nu_split, k, gamma)
    thr = min(bernoulli_threshold(gamma + 1, 8 * nu_split), MASK64)
    status, members, queries, marked = local_ec_run(
        graph.indptr, graph.heads, graph.n, True, int(x),
        2 * int(x), k + gamma, cap, thr, seed & MASK64)
    if status != STATUS_CUT:
        names = {1: "stopped_out", 2: "mark_cap", 3: "swallowed_all"}
        return VertexCutOutcome(False, None, None, names[status],
                                queries, marked, guarantee_void)
    triple, split_cut, split_vol = reconstruct_separation(graph, x, members)
    if triple is None or split_cut >= k + gamma:
        return VertexCutOutcome(False, None, None, "no_triple",
                                queries, marked, guarantee_void)
    assert is_separation_triple(graph, triple.left, triple.cut, triple.right)
    assert x in triple.left or len(triple.left) == 1
    assert len(triple.cut) < k + gamma
    return VertexCutOutcome(True, triple, len(triple.cut), "cut",
                            queries, marked, guarantee_void)


def gap_local_vc(graph, x, nu, k, gamma, seed, strict=True):
    """Gap variant: detects triples with vol_out(L) <= nu and |S| < k - gamma
    with probability >= 3/4; any returned cut has size at most k.

    Strict mode needs 1 <= k - gamma, k - gamma <= n/4, gamma <= k/2 and
    nu < m*(gamma+1)/(12480*(k-gamma)).
    """
    _validate_common(x, nu, k, gamma, graph.n)
    guarantee_void = False
    ok = (k >= 1 + gamma and 2 * gamma <= k
          and 4 * (k - gamma) <= graph.n
          and nu * VC_RANGE_DEN * (k - gamma) < graph.m * (gamma + 1))
    if not ok:
        if strict:
            raise PreconditionError(
                f"gap variant needs 1 <= k-gamma <= n/4, gamma <= k/2 and "
                f"nu < m*(gamma+1)/({VC_RANGE_DEN}*(k-gamma)); "
                f"got nu={nu}, k={k}, gamma={gamma}, n={graph.n}, "
                f"m={graph.m}")
        guarantee_void = True
    if nu < k - gamma:
        sep = out_neighborhood(graph, [x])
        right = set(range(graph.n)) - {x} - sep
        if len(sep) < k - gamma and right:
            triple = SeparationTriple(frozenset([x]), frozenset(sep),
                                      frozenset(right))
            return VertexCutOutcome(True, triple, len(sep), "cut",
                                    0, 0, guarantee_void)
        return VertexCutOutcome(False, None, None, "degree_at_least_target",
                                0, 0, guarantee_void)
    out = local_vc(graph, x, nu, k - gamma, gamma, seed, strict=False)
    if guarantee_void and not out.guarantee_void:
        out = VertexCutOutcome(out.found, out.triple, out.cut_value,
                               out.status, out.queries, out.marked, True)
    return out
