"""Property testers for k-edge- and k-vertex-connectivity.

All testers are one-sided: a witness is returned only after the claimed
cut has been recounted on the actual graph, so k-connected inputs are
always accepted.  Probing accesses the graph exclusively through a
counting adjacency-list oracle (``QueryAccess``); local searches report
their own query counts, and every run stays within a closed-form budget
computed from the configuration alone.

Unbounded-degree testers sample seed vertices and sweep geometric volume
scales.  Bounded-degree testers regularize the graph to out-degree d with
virtual self-loops, sample edges uniformly through the oracle, and sweep
a double geometric grid of component sizes and volumes.
"""

import math
from dataclasses import dataclass, field

from .graph import (
    PreconditionError,
    SeparationTriple,
    cut_size,
    is_separation_triple,
    out_neighborhood,
)
from .local_ec import gap_local_ec, mark_cap
from .local_vc import gap_local_vc
from .rng import SplitMix64

EDGE_RANGE_DEN = 520      # strict: k < eps*n/520 * (floor(log2(m/n)) + 1)
VERTEX_RANGE_DEN = 12480  # strict: k < n/8 * min(1, eps/12480 * (...))
SIMPLE_SHORTCUT_BOUND = 4 # simple graphs with eps > 4/k need only degrees


@dataclass
class TesterConfig:
    __test__ = False  # not a pytest class despite the name

    k: int
    eps: float
    d: int | None = None              # bounded model: degree bound
    mean_degree: float | None = None  # unbounded model: d-bar if known
    simple_graph: bool = False
    c1: int = 4
    c2: int = 8
    c3: int = 8
    strict: bool = False

    def __post_init__(self):
        if self.k < 1:
            raise PreconditionError("k must be at least 1")
        if not (0 < self.eps <= 1):
            raise PreconditionError("eps must be in (0, 1]")


@dataclass
class TesterVerdict:
    __test__ = False  # not a pytest class despite the name

    accepted: bool
    witness_kind: str | None = None   # "edge" / "edge_in" / "vertex"
    witness: object = None            # frozenset side or SeparationTriple
    queries: int = 0
    budget: int = 0
    note: str = ""


class QueryAccess:
    """Counting adjacency-list oracle.

    ``query(v, slot)`` returns (head, virtual) and charges one query on
    the first access of each (v, slot) pair, including the end-of-list
    probe.  With a degree bound d, slots up to d - 1 past the real list
    answer with a virtual self-loop (v, v), making the graph d-out-regular
    without changing any cut.
    """

    def __init__(self, graph, d=None):
        self.graph = graph
        self.d = d
        self.query_count = 0
        self._seen = set()
        if d is not None:
            top = max((graph.out_degree(v) for v in range(graph.n)),
                      default=0)
            if top > d:
                raise PreconditionError(
                    f"degree bound {d} below max out-degree {top}")

    @property
    def n(self):
        return self.graph.n

    def query(self, v, slot):
        key = (v, slot)
        if key not in self._seen:
            self._seen.add(key)
            self.query_count += 1
        deg = self.graph.out_degree(v)
        if slot < deg:
            return self.graph.head(v, slot), False
        if self.d is not None and slot < self.d:
            return v, True
        return None, False

    def degree_below(self, v, k):
        """Real out-degree if it is below k (at most k probes), else None
        (one probe)."""
        head, virtual = self.query(v, k - 1)
        if head is not None and not virtual:
            return None
        deg = 0
        while deg < k - 1:
            head, virtual = self.query(v, deg)
            if head is None or virtual:
                break
            deg += 1
        return deg

    def real_out_arcs(self, v, limit):
        """First ``limit`` real arc heads of v, charged per slot."""
        heads = []
        for slot in range(limit):
            head, virtual = self.query(v, slot)
            if head is None or virtual:
                break
            heads.append(head)
        return heads


def sample_edge_regularized(access, rng):
    """Uniform edge of the d-regularized graph: uniform vertex, uniform
    slot.  Real arcs come out with probability 1/(n*d) each; the rest are
    virtual self-loops."""
    if access.d is None:
        raise PreconditionError("edge sampling needs a degree bound")
    v = rng.below(access.n)
    slot = rng.below(access.d)
    head, virtual = access.query(v, slot)
    return v, head, virtual


def _log2_floor(x):
    return int(x).bit_length() - 1


def _check_strict_edge(graph, cfg):
    t = _log2_floor(max(graph.m // max(graph.n, 1), 1)) + 1
    if not (cfg.k * EDGE_RANGE_DEN < cfg.eps * graph.n * t):
        raise PreconditionError(
            f"strict range needs k < eps*n*(floor(log2(m/n))+1)/"
            f"{EDGE_RANGE_DEN}; k={cfg.k}, eps={cfg.eps}, n={graph.n}, "
            f"m={graph.m}")


def _check_strict_vertex(graph, cfg):
    t = _log2_floor(max(graph.m // max(graph.n, 1), 1)) + 1
    bound = graph.n / 8 * min(1.0, cfg.eps * t / VERTEX_RANGE_DEN)
    if not (cfg.k < bound):
        raise PreconditionError(
            f"strict range needs k < n/8 * min(1, eps*(floor(log2(m/n))+1)/"
            f"{VERTEX_RANGE_DEN}); k={cfg.k}, eps={cfg.eps}, n={graph.n}, "
            f"m={graph.m}")


def _edge_witness(graph, side, reverse):
    """Recount the claimed cut; None unless it is genuinely below k is
    checked by the caller against cfg.k."""
    g = graph.reverse() if reverse else graph
    return cut_size(g, side)


def _vertex_witness_from_x(graph, x):
    sep = out_neighborhood(graph, [x])
    right = set(range(graph.n)) - {x} - sep
    if not right:
        return None
    return SeparationTriple(frozenset([x]), frozenset(sep), frozenset(right))


def _scales(cfg, vertex):
    big_l = _log2_floor(cfg.k)
    shift = 3 if vertex else 2
    out = []
    for i in range(big_l + 1):
        nu_i = math.ceil(2 ** (i + shift) / cfg.eps * (big_l + 1))
        gamma_i = min(2 ** i - 1, cfg.k // 2)
        out.append((nu_i, gamma_i))
    return out


def _seed_count(cfg):
    k = cfg.k
    lnk = math.log(max(k, 2))
    if cfg.mean_degree:
        return max(1, math.ceil(cfg.c2 * k * lnk / (cfg.eps * cfg.mean_degree)))
    return max(1, math.ceil(cfg.c2 * lnk / cfg.eps))


def _degree_samples(cfg):
    return max(1, math.ceil(cfg.c1 / cfg.eps))


def _shortcut_samples(cfg):
    if cfg.mean_degree:
        return max(1, math.ceil(cfg.c1 * cfg.k / (cfg.eps * cfg.mean_degree)))
    return _degree_samples(cfg)


def _local_call_budget(cfg, nu, gamma):
    # worst case marks of one gap call plus its degree shortcut reads
    return mark_cap(nu, max(cfg.k - gamma, 1), gamma) + cfg.k


def unbounded_budget(cfg, vertex=False):
    """Closed-form query budget of the unbounded tester."""
    total = _degree_samples(cfg) * cfg.k
    if cfg.simple_graph and cfg.eps * cfg.k > SIMPLE_SHORTCUT_BOUND:
        return total + _shortcut_samples(cfg) * cfg.k
    seeds = _seed_count(cfg)
    for nu_i, gamma_i in _scales(cfg, vertex):
        total += seeds * 2 * _local_call_budget(cfg, nu_i, gamma_i)
    return total


def bounded_budget(cfg, vertex=False):
    """Closed-form query budget of the bounded tester."""
    total = _degree_samples(cfg) * cfg.k
    if cfg.simple_graph and cfg.eps * cfg.k > SIMPLE_SHORTCUT_BOUND:
        return total + _shortcut_samples(cfg) * cfg.k
    for nu, gamma, reps in _bounded_grid(cfg, vertex):
        total += reps * (1 + 2 * _local_call_budget(cfg, nu, gamma))
    return total


def _bounded_grid(cfg, vertex):
    big_l = _log2_floor(cfg.k)
    shift = 3 if vertex else 2
    grid = []
    for i in range(big_l + 1):
        eta_i = math.ceil(2 ** (i + shift) / cfg.eps * (big_l + 1))
        lam_i = _log2_floor(max(eta_i, 1))
        gamma_i = min(2 ** i - 1, cfg.k // 2)
        for j in range(lam_i + 1):
            reps = max(1, math.ceil(
                cfg.c3 * (big_l + 1) * (lam_i + 1)
                / (cfg.eps * 2.0 ** (j - i))))
            grid.append((2 ** (j + 1), gamma_i, reps))
    return grid


def _degree_phase(graph, access, cfg, rng, samples, vertex):
    """Low-degree sampling; returns a verdict-ready witness or None."""
    for _ in range(samples):
        v = rng.below(graph.n)
        deg = access.degree_below(v, cfg.k)
        if deg is None:
            continue
        if vertex:
            triple = _vertex_witness_from_x(graph, v)
            if triple is not None and len(triple.cut) < cfg.k:
                return "vertex", triple
        else:
            side = frozenset([v])
            if cut_size(graph, side) < cfg.k:
                return "edge", side
    return None


def _run_gap_pair(graph, access, cfg, rng, x, nu, gamma, vertex):
    """Gap local search from x on the graph and its reverse; returns
    (witness_kind, witness, queries) or (None, None, queries)."""
    queries = 0
    for reverse, g in ((False, graph), (True, graph.reverse())):
        if nu < cfg.k - gamma:
            deg = access.degree_below(x, cfg.k - gamma) if not reverse else None
            if reverse:
                # reverse degrees are not exposed by the oracle; charge a
                # full probe and read them directly
                queries += min(cfg.k, g.out_degree(x) + 1)
                deg = g.out_degree(x) if g.out_degree(x) < cfg.k - gamma \
                    else None
            if deg is None:
                continue
            if vertex:
                triple = _vertex_witness_from_x(g, x)
                if triple is not None and len(triple.cut) < cfg.k:
                    if reverse:
                        triple = SeparationTriple(triple.right, triple.cut,
                                                  triple.left)
                    if is_separation_triple(graph, triple.left, triple.cut,
                                            triple.right):
                        return "vertex", triple, queries
                continue
            side = frozenset([x])
            if cut_size(g, side) < cfg.k:
                return ("edge_in" if reverse else "edge"), side, queries
            continue
        if vertex:
            out = gap_local_vc(g, x, nu, cfg.k, gamma, rng.next_u64(),
                               strict=False)
            queries += out.queries
            if out.found and out.cut_value < cfg.k:
                triple = out.triple
                if reverse:
                    triple = SeparationTriple(triple.right, triple.cut,
                                              triple.left)
                if is_separation_triple(graph, triple.left, triple.cut,
                                        triple.right):
                    return "vertex", triple, queries
        else:
            out = gap_local_ec(g, x, nu, cfg.k, gamma, rng.next_u64(),
                               strict=False)
            queries += out.queries
            if out.found and out.cut_value < cfg.k:
                side = out.cut_side
                if len(side) < graph.n and _edge_witness(
                        graph, side, reverse) < cfg.k:
                    return ("edge_in" if reverse else "edge"), side, queries
    return None, None, queries


def _unbounded_tester(graph, cfg, seed, vertex):
    if cfg.strict:
        (_check_strict_vertex if vertex else _check_strict_edge)(graph, cfg)
    if graph.n < 2:
        return TesterVerdict(True, note="trivial")
    rng = SplitMix64(seed)
    access = QueryAccess(graph)
    budget = (unbounded_budget(cfg, vertex=vertex))
    extra = 0

    shortcut = cfg.simple_graph and cfg.eps * cfg.k > SIMPLE_SHORTCUT_BOUND
    samples = _shortcut_samples(cfg) + _degree_samples(cfg) if shortcut \
        else _degree_samples(cfg)
    hit = _degree_phase(graph, access, cfg, rng, samples, vertex)
    if hit is not None:
        return TesterVerdict(False, hit[0], hit[1],
                             access.query_count, budget, "low_degree")
    if shortcut:
        return TesterVerdict(True, queries=access.query_count,
                             budget=budget, note="simple_shortcut")

    for _ in range(_seed_count(cfg)):
        x = rng.below(graph.n)
        for nu_i, gamma_i in _scales(cfg, vertex):
            kind, witness, q = _run_gap_pair(graph, access, cfg, rng, x,
                                             nu_i, gamma_i, vertex)
            extra += q
            if kind is not None:
                return TesterVerdict(False, kind, witness,
                                     access.query_count + extra, budget,
                                     "local")
    return TesterVerdict(True, queries=access.query_count + extra,
                         budget=budget)


def _bounded_tester(graph, cfg, seed, vertex):
    if cfg.d is None:
        raise PreconditionError("bounded tester needs a degree bound d")
    if cfg.strict:
        (_check_strict_vertex if vertex else _check_strict_edge)(graph, cfg)
    if graph.n < 2:
        return TesterVerdict(True, note="trivial")
    rev_top = max((graph.reverse().out_degree(v) for v in range(graph.n)),
                  default=0)
    if rev_top > cfg.d:
        raise PreconditionError(
            f"degree bound {cfg.d} below max in-degree {rev_top}")
    rng = SplitMix64(seed)
    access = QueryAccess(graph, d=cfg.d)
    budget = bounded_budget(cfg, vertex=vertex)
    extra = 0

    shortcut = cfg.simple_graph and cfg.eps * cfg.k > SIMPLE_SHORTCUT_BOUND
    samples = _shortcut_samples(cfg) + _degree_samples(cfg) if shortcut \
        else _degree_samples(cfg)
    hit = _degree_phase(graph, access, cfg, rng, samples, vertex)
    if hit is not None:
        return TesterVerdict(False, hit[0], hit[1],
                             access.query_count, budget, "low_degree")
    if shortcut:
        return TesterVerdict(True, queries=access.query_count,
                             budget=budget, note="simple_shortcut")

    for nu, gamma, reps in _bounded_grid(cfg, vertex):
        for _ in range(reps):
            x, _head, _virtual = sample_edge_regularized(access, rng)
            kind, witness, q = _run_gap_pair(graph, access, cfg, rng, x,
                                             nu, gamma, vertex)
            extra += q
            if kind is not None:
                return TesterVerdict(False, kind, witness,
                                     access.query_count + extra, budget,
                                     "local")
    return TesterVerdict(True, queries=access.query_count + extra,
                         budget=budget)


def test_k_edge_unbounded(graph, cfg, seed):
    return _unbounded_tester(graph, cfg, seed, vertex=False)


def test_k_vertex_unbounded(graph, cfg, seed):
    return _unbounded_tester(graph, cfg, seed, vertex=True)


def test_k_edge_bounded(graph, cfg, seed):
    return _bounded_tester(graph, cfg, seed, vertex=False)


def test_k_vertex_bounded(graph, cfg, seed):
    return _bounded_tester(graph, cfg, seed, vertex=True)


def verify_far_certificate(graph, kind, k, eps, family, d=None):
    """Check that a certificate family proves eps-farness from
    k-connectivity.  Edge kind: pairwise disjoint vertex sets with total
    boundary deficiency above eps*m, outgoing or incoming.  Vertex kind:
    separation triples with pairwise disjoint left sides and total cut
    deficiency above eps*m.  With a degree bound d the mass denominator is
    n*d instead of m."""
    denom = eps * (graph.n * d if d is not None else graph.m)
    if kind == "edge":
        seen = set()
        for side in family:
            side = set(side)
            if not side or seen & side or len(side) >= graph.n:
                return False
            seen |= side
        deficiency_out = sum(max(k - cut_size(graph, side), 0)
                             for side in family)
        deficiency_in = sum(max(k - cut_size(graph.reverse(), side), 0)
                            for side in family)
        return max(deficiency_out, deficiency_in) > denom
    if kind == "vertex":
        seen = set()
        total = 0
        for triple in family:
            left, sep, right = triple.left, triple.cut, triple.right
            if not is_separation_triple(graph, left, sep, right):
                return False
            if seen & set(left):
                return False
            seen |= set(left)
            total += max(k - len(sep), 0)
        return total > denom
    raise PreconditionError(f"unknown certificate kind {kind!r}")
