"""Independent brute-force oracles used to validate the randomized code.

Everything here favors obviousness over speed: subset enumeration for the
local searches (n <= 20), full flow sweeps for exact connectivity
(n <= 60), and plain recursion for the subgraph decomposition.
"""

from itertools import combinations

from .graph import (
    PreconditionError,
    cut_arcs,
    cut_size,
    out_neighborhood,
    strongly_connected_components,
    vol_out,
)
from .maxflow import st_edge_cut_capped, st_vertex_cut_capped

ENUM_MAX_N = 20   # subset enumeration budget
FLOW_MAX_N = 60   # flow sweep budget


def _check_enum_budget(graph):
    if graph.n > ENUM_MAX_N:
        raise PreconditionError(
            f"enumeration oracle limited to n <= {ENUM_MAX_N}")


def _check_flow_budget(graph):
    if graph.n > FLOW_MAX_N:
        raise PreconditionError(f"flow oracle limited to n <= {FLOW_MAX_N}")


def brute_local_ec(graph, x, nu, k):
    """All S with x in S, S != V, vol_out(S) <= nu, |E(S, V-S)| < k.

    Enumerates subsets in Gray-code order, updating volume and cut size
    incrementally on the single flipped vertex.
    """
    _check_enum_budget(graph)
    n = graph.n
    others = [v for v in range(n) if v != x]
    out_by_v = [[int(h) for h in graph.out_arcs(v)] for v in range(n)]
    in_by_v = [[] for _ in range(n)]
    for v in range(n):
        for h in out_by_v[v]:
            in_by_v[h].append(v)

    in_set = [False] * n
    in_set[x] = True
    vol = graph.out_degree(x)
    cut = sum(1 for h in out_by_v[x] if h != x)
    found = []

    def record():
        if vol <= nu and cut < k:
            members = frozenset(v for v in range(n) if in_set[v])
            if len(members) < n:
                found.append(members)

    record()
    for g in range(1, 1 << len(others)):
        v = others[(g & -g).bit_length() - 1]
        if not in_set[v]:
            in_set[v] = True
            vol += graph.out_degree(v)
            cut += sum(1 for h in out_by_v[v] if h != v and not in_set[h])
            cut -= sum(1 for u in in_by_v[v] if u != v and in_set[u])
        else:
            in_set[v] = False
            vol -= graph.out_degree(v)
            cut -= sum(1 for h in out_by_v[v] if h != v and not in_set[h])
            cut += sum(1 for u in in_by_v[v] if u != v and in_set[u])
        record()
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def brute_local_ec_recount(graph, x, nu, k):
    """Same answer by brute recount over itertools combinations; used to
    cross-check the incremental enumeration."""
    _check_enum_budget(graph)
    others = [v for v in range(graph.n) if v != x]
    found = []
    for size in range(len(others) + 1):
        for extra in combinations(others, size):
            members = frozenset((x,) + extra)
            if len(members) == graph.n:
                continue
            if vol_out(graph, members) <= nu and cut_size(graph, members) < k:
                found.append(members)
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def brute_local_vc(graph, x, nu, k):
    """All separation triples (L, N_out(L), R) with x in L,
    vol_out(L) <= nu, |N_out(L)| < k and R nonempty.  Gray-code
    enumeration of L with incremental neighborhood counting."""
    _check_enum_budget(graph)
    n = graph.n
    others = [v for v in range(n) if v != x]
    out_by_v = [[int(h) for h in graph.out_arcs(v) if int(h) != v]
                for v in range(n)]

    in_l = [False] * n
    nbr_cnt = [0] * n
    in_l[x] = True
    vol = graph.out_degree(x)
    s_size = 0
    for h in out_by_v[x]:
        nbr_cnt[h] += 1
        if nbr_cnt[h] == 1:
            s_size += 1
    l_size = 1
    found = []

    def record():
        if vol <= nu and s_size < k and l_size + s_size < n:
            left = frozenset(v for v in range(n) if in_l[v])
            sep = frozenset(out_neighborhood(graph, left))
            right = frozenset(range(n)) - left - sep
            found.append((left, sep, right))

    record()
    for g in range(1, 1 << len(others)):
        v = others[(g & -g).bit_length() - 1]
        if not in_l[v]:
            if nbr_cnt[v] > 0:
                s_size -= 1
            in_l[v] = True
            l_size += 1
            vol += graph.out_degree(v)
            for h in out_by_v[v]:
                nbr_cnt[h] += 1
                if nbr_cnt[h] == 1 and not in_l[h]:
                    s_size += 1
        else:
            in_l[v] = False
            l_size -= 1
            vol -= graph.out_degree(v)
            for h in out_by_v[v]:
                nbr_cnt[h] -= 1
                if nbr_cnt[h] == 0 and not in_l[h]:
                    s_size -= 1
            if nbr_cnt[v] > 0:
                s_size += 1
        record()
    return sorted(found, key=lambda t: (len(t[0]), sorted(t[0])))


def exact_edge_connectivity(graph):
    """(lambda, witness) by a root flow sweep: lambda = min over v != r of
    the smaller of the r->v and v->r cut values.  The witness is the arc
    id tuple of a minimum cut, or None for n <= 1."""
    _check_flow_budget(graph)
    if graph.n <= 1:
        return 0, None
    r = 0
    best = graph.m + 1
    witness = None
    for v in range(1, graph.n):
        for s, t in ((r, v), (v, r)):
            if best == 0:
                return 0, witness
            res = st_edge_cut_capped(graph, s, t, best)
            if not res.capped and res.value < best:
                best = res.value
                witness = res.cut_arcs
    return best, witness


def exact_vertex_connectivity(graph):
    """(kappa, cut or None): minimum over all ordered non-adjacent pairs;
    kappa = n - 1 when every ordered pair is adjacent."""
    _check_flow_budget(graph)
    n = graph.n
    if n <= 1:
        return n - 1 if n else 0, None
    best = n - 1
    witness = None
    adj = [set(int(h) for h in graph.out_arcs(v)) for v in range(n)]
    for s in range(n):
        for t in range(n):
            if s == t or t in adj[s]:
                continue
            if best == 0:
                return 0, witness
            res = st_vertex_cut_capped(graph, s, t, best)
            if res.adjacent or res.capped:
                continue
            if res.value < best or witness is None:
                best = res.value
                witness = tuple(res.cut_vertices)
    if witness is None:
        return n - 1, None
    return best, witness


def brute_max_kecs(graph, k):
    """Maximal k-edge-connected subgraph partition by plain recursion:
    split into SCCs, and split any component whose edge connectivity is
    below k along an exact minimum cut."""
    _check_flow_budget(graph)
    if k < 1:
        raise PreconditionError("k must be at least 1")
    parts = []
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
            parts.append((ids[0],))
            continue
        lam, witness = exact_edge_connectivity(g)
        if lam >= k:
            parts.append(tuple(sorted(ids)))
            continue
        work.append((g.without_arcs(witness), ids))
    return sorted(parts)
