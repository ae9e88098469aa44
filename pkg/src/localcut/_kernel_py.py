"""Pure-Python kernels for the randomized local cut search.

The compiled module ``localcut._speedups`` implements the same two entry
points with identical randomness consumption: one splitmix64 draw per
newly marked arc (main kernel) or per edge sample (budget kernel), so a
given (graph, params, seed) produces bit-identical outcomes either way.

Node ids: in plain mode they are graph vertices.  In split mode they are
split-graph ids over the base CSR (v_in = 2v, v_out = 2v + 1, the seed
vertex collapsed onto its even id); adjacency is derived arithmetically,
no split graph is materialized.

Status codes: 0 cut found (vertex list returned), 1 every pass ended in a
random stop, 2 mark cap reached, 3 the search swallowed the whole vertex
set (no informative cut).
"""

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15

NIL = -1

STATUS_CUT = 0
STATUS_EXHAUSTED = 1
STATUS_CAP = 2
STATUS_FULL = 3


def _mix64(z):
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def local_ec_run(indptr, heads, n_base, split, split_x, x, iters, cap, thr, seed):
    """Repeated randomly-stopped DFS with path reversal.

    indptr/heads: base CSR (any indexable int sequences).
    split/split_x: split-graph mode over the base graph at split_x.
    x: seed node id (plain vertex, or split id in split mode).
    iters: number of DFS passes.
    cap: abort once this many arcs are marked.
    thr: 64-bit stop threshold (one draw per newly marked arc).
    Returns (status, vertices_or_None, queries, marked).
    """
    if split:
        n_ids = 2 * n_base
        real_n = 2 * n_base - 1
        x2 = 2 * split_x
    else:
        n_ids = n_base
        real_n = n_base
        x2 = -2
    state = seed & MASK64

    # discovered-arc records, doubly linked per current tail
    a_tail = []
    a_head = []
    a_marked = []
    a_next = []
    a_prev = []
    lst_first = [NIL] * n_ids
    lst_last = [NIL] * n_ids
    nbase = [0] * n_ids

    vis_stamp = [-1] * n_ids
    ptr_stamp = [-1] * n_ids
    cur = [NIL] * n_ids
    parent = [NIL] * n_ids

    queries = 0
    marked = 0

    for it in range(iters):
        y = NIL
        visited = [x]
        vis_stamp[x] = it
        ptr_stamp[x] = it
        cur[x] = lst_first[x]
        stack = [x]
        while stack:
            v = stack[-1]
            if ptr_stamp[v] != it:
                ptr_stamp[v] = it
                cur[v] = lst_first[v]
            a = cur[v]
            if a != NIL:
                cur[v] = a_next[a]
            else:
                # extend the discovered list from the base adjacency
                if split:
                    if v == x2:
                        bv = split_x
                        dv = indptr[bv + 1] - indptr[bv]
                    elif v & 1 == 0:
                        bv = NIL
                        dv = 1
                    else:
                        bv = v >> 1
                        dv = indptr[bv + 1] - indptr[bv]
                else:
                    bv = v
                    dv = indptr[v + 1] - indptr[v]
                nb = nbase[v]
                if nb >= dv:
                    stack.pop()
                    continue
                nbase[v] = nb + 1
                if split:
                    if bv == NIL:
                        h = v | 1  # the in->out arc
                    else:
                        h = int(heads[indptr[bv] + nb]) << 1
                else:
                    h = int(heads[indptr[v] + nb])
                queries += 1
                a = len(a_tail)
                a_tail.append(v)
                a_head.append(h)
                a_marked.append(False)
                a_next.append(NIL)
                a_prev.append(lst_last[v])
                if lst_last[v] != NIL:
                    a_next[lst_last[v]] = a
                else:
                    lst_first[v] = a
                lst_last[v] = a
            if not a_marked[a]:
                a_marked[a] = True
                marked += 1
                if marked >= cap:
                    return STATUS_CAP, None, queries, marked
                state = (state + GOLDEN) & MASK64
                if _mix64(state) < thr:
                    y = v
                    break
            b = a_head[a]
            if vis_stamp[b] != it:
                vis_stamp[b] = it
                parent[b] = a
                ptr_stamp[b] = it
                cur[b] = lst_first[b]
                visited.append(b)
                stack.append(b)
        if y == NIL:
            if len(visited) >= real_n:
                return STATUS_FULL, None, queries, marked
            return STATUS_CUT, visited, queries, marked
        # reverse the tree path from the seed to y, arc by arc
        v = y
        while v != x:
            a = parent[v]
            u = a_tail[a]
            p = a_prev[a]
            nx = a_next[a]
            if p != NIL:
                a_next[p] = nx
            else:
                lst_first[u] = nx
            if nx != NIL:
                a_prev[nx] = p
            else:
                lst_last[u] = p
            a_tail[a] = v
            a_head[a] = u
            a_prev[a] = lst_last[v]
            a_next[a] = NIL
            if lst_last[v] != NIL:
                a_next[lst_last[v]] = a
            else:
                lst_first[v] = a
            lst_last[v] = a
            v = u
    return STATUS_EXHAUSTED, None, queries, marked


def local_ec_alt_run(indptr, heads, n_base, split, split_x, x, iters, budget, seed):
    """Budgeted DFS variant: each pass visits at most ``budget`` edges; a
    short pass returns its tree, otherwise a uniformly random visited edge
    picks the reversal target (one draw per pass)."""
    if split:
        n_ids = 2 * n_base
        real_n = 2 * n_base - 1
        x2 = 2 * split_x
    else:
        n_ids = n_base
        real_n = n_base
        x2 = -2
    state = seed & MASK64

    a_tail = []
    a_head = []
    a_next = []
    a_prev = []
    lst_first = [NIL] * n_ids
    lst_last = [NIL] * n_ids
    nbase = [0] * n_ids

    vis_stamp = [-1] * n_ids
    ptr_stamp = [-1] * n_ids
    cur = [NIL] * n_ids
    parent = [NIL] * n_ids

    queries = 0
    visited_total = 0

    for it in range(iters):
        visited = [x]
        vis_stamp[x] = it
        ptr_stamp[x] = it
        cur[x] = lst_first[x]
        stack = [x]
        pass_arcs = []
        while stack and len(pass_arcs) < budget:
            v = stack[-1]
            if ptr_stamp[v] != it:
                ptr_stamp[v] = it
                cur[v] = lst_first[v]
            a = cur[v]
            if a != NIL:
                cur[v] = a_next[a]
            else:
                if split:
                    if v == x2:
                        bv = split_x
                        dv = indptr[bv + 1] - indptr[bv]
                    elif v & 1 == 0:
                        bv = NIL
                        dv = 1
                    else:
                        bv = v >> 1
                        dv = indptr[bv + 1] - indptr[bv]
                else:
                    bv = v
                    dv = indptr[v + 1] - indptr[v]
                nb = nbase[v]
                if nb >= dv:
                    stack.pop()
                    continue
                nbase[v] = nb + 1
                if split:
                    if bv == NIL:
                        h = v | 1
                    else:
                        h = int(heads[indptr[bv] + nb]) << 1
                else:
                    h = int(heads[indptr[v] + nb])
                queries += 1
                a = len(a_tail)
                a_tail.append(v)
                a_head.append(h)
                a_next.append(NIL)
                a_prev.append(lst_last[v])
                if lst_last[v] != NIL:
                    a_next[lst_last[v]] = a
                else:
                    lst_first[v] = a
                lst_last[v] = a
            pass_arcs.append(a)
            b = a_head[a]
            if vis_stamp[b] != it:
                vis_stamp[b] = it
                parent[b] = a
                ptr_stamp[b] = it
                cur[b] = lst_first[b]
                visited.append(b)
                stack.append(b)
        visited_total += len(pass_arcs)
        if len(pass_arcs) < budget:
            if len(visited) >= real_n:
                return STATUS_FULL, None, queries, visited_total
            return STATUS_CUT, visited, queries, visited_total
        state = (state + GOLDEN) & MASK64
        y = a_head[pass_arcs[_mix64(state) % budget]]
        v = y
        while v != x:
            a = parent[v]
            u = a_tail[a]
            p = a_prev[a]
            nx = a_next[a]
            if p != NIL:
                a_next[p] = nx
            else:
                lst_first[u] = nx
            if nx != NIL:
                a_prev[nx] = p
            else:
                lst_last[u] = p
            a_tail[a] = v
            a_head[a] = u
            a_prev[a] = lst_last[v]
            a_next[a] = NIL
            if lst_last[v] != NIL:
                a_next[lst_last[v]] = a
            else:
                lst_first[v] = a
            lst_last[v] = a
            v = u
    return STATUS_EXHAUSTED, None, queries, visited_total


def max_flow_capped(n, efrom, eto, ecap, s, t, cap):
    """Shortest-augmenting-path max flow, stopping at ``cap`` units.

    Edges are directed with small integer capacities.  Returns
    (value, reachable) where ``reachable`` is the source side of a minimum
    cut when value < cap, else None.
    """
    m = len(efrom)
    # residual edge 2i is edge i forward, 2i+1 its reverse
    res = [0] * (2 * m)
    for i in range(m):
        res[2 * i] = int(ecap[i])
    adj = [[] for _ in range(n)]
    for i in range(m):
        adj[int(efrom[i])].append(2 * i)
    for i in range(m):
        adj[int(eto[i])].append(2 * i + 1)
    other = [0] * (2 * m)
    for i in range(m):
        other[2 * i] = int(eto[i])
        other[2 * i + 1] = int(efrom[i])

    value = 0
    prev_edge = [-1] * n
    while value < cap:
        # BFS in the residual graph
        for i in range(n):
            prev_edge[i] = -1
        prev_edge[s] = -2
        queue = [s]
        qi = 0
        found = False
        while qi < len(queue) and not found:
            v = queue[qi]
            qi += 1
            for e in adj[v]:
                if res[e] <= 0:
                    continue
                w = other[e]
                if prev_edge[w] != -1:
                    continue
                prev_edge[w] = e
                if w == t:
                    found = True
                    break
                queue.append(w)
        if not found:
            break
        # bottleneck along the path
        bottleneck = cap - value
        v = t
        while v != s:
            e = prev_edge[v]
            if res[e] < bottleneck:
                bottleneck = res[e]
            v = other[e ^ 1]
        v = t
        while v != s:
            e = prev_edge[v]
            res[e] -= bottleneck
            res[e ^ 1] += bottleneck
            v = other[e ^ 1]
        value += bottleneck
    if value >= cap:
        return value, None
    seen = [False] * n
    seen[s] = True
    queue = [s]
    qi = 0
    while qi < len(queue):
        v = queue[qi]
        qi += 1
        for e in adj[v]:
            w = other[e]
            if res[e] > 0 and not seen[w]:
                seen[w] = True
                queue.append(w)
    return value, [v for v in range(n) if seen[v]]
