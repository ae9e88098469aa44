# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels; semantics and randomness consumption match
localcut._kernel_py exactly (see its docstring for the contract)."""

from libc.stdlib cimport free, malloc

import numpy as np

ctypedef unsigned long long u64
ctypedef long long i64

cdef u64 MASK64 = <u64>0xFFFFFFFFFFFFFFFF
cdef u64 GOLDEN = <u64>0x9E3779B97F4A7C15

STATUS_CUT = 0
STATUS_EXHAUSTED = 1
STATUS_CAP = 2
STATUS_FULL = 3


cdef inline u64 _mix64(u64 z) nogil:
    z = (z ^ (z >> 30)) * <u64>0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * <u64>0x94D049BB133111EB
    return z ^ (z >> 31)


def local_ec_run(indptr_obj, heads_obj, i64 n_base, bint split, i64 split_x,
                 i64 x, i64 iters, i64 cap, u64 thr, u64 seed):
    cdef i64[:] indptr = np.ascontiguousarray(indptr_obj, dtype=np.int64)
    cdef i64[:] heads = np.ascontiguousarray(heads_obj, dtype=np.int64)
    cdef i64 n_ids, real_n, x2, m_eff
    if split:
        n_ids = 2 * n_base
        real_n = 2 * n_base - 1
        x2 = 2 * split_x
        m_eff = indptr[n_base] + n_base - 1
    else:
        n_ids = n_base
        real_n = n_base
        x2 = -2
        m_eff = indptr[n_base]
    cdef i64 alloc = (cap if cap < m_eff else m_eff) + 1
    if alloc < 1:
        alloc = 1

    cdef i64 *a_tail = <i64 *>malloc(alloc * sizeof(i64))
    cdef i64 *a_head = <i64 *>malloc(alloc * sizeof(i64))
    cdef char *a_marked = <char *>malloc(alloc)
    cdef i64 *a_next = <i64 *>malloc(alloc * sizeof(i64))
    cdef i64 *a_prev = <i64 *>malloc(alloc * sizeof(i64))
    cdef i64 *lst_first = <i64 *>malloc(n_ids * sizeof(i64))
    cdef i64 *lst_last = <i64 *>malloc(n_ids * sizeof(i64))
    cdef i64 *nbase = <i64 *>malloc(n_ids * sizeof(i64))
    cdef i64 *vis_stamp = <i64 *>malloc(n_ids * sizeof(i64))
    cdef i64 *ptr_stamp = <i64 *>malloc(n_ids * sizeof(i64))
    cdef i64 *cur = <i64 *>malloc(n_ids * sizeof(i64))
    cdef i64 *parent = <i64 *>malloc(n_ids * sizeof(i64))
    cdef i64 *stack = <i64 *>malloc(n_ids * sizeof(i64))
    cdef i64 *visited = <i64 *>malloc(n_ids * sizeof(i64))
    bufs = [<size_t>a_tail, <size_t>a_head, <size_t>a_marked, <size_t>a_next,
            <size_t>a_prev, <size_t>lst_first, <size_t>lst_last,
            <size_t>nbase, <size_t>vis_stamp, <size_t>ptr_stamp,
            <size_t>cur, <size_t>parent, <size_t>stack, <size_t>visited]

    cdef i64 i, it, v, a, u, y, b, h, bv, dv, nb, p, nx
    cdef i64 n_arcs = 0, queries = 0, marked = 0
    cdef i64 stack_top, n_visited
    cdef u64 state = seed
    cdef int status = STATUS_EXHAUSTED
    cdef object result = None

    for i in range(n_ids):
        lst_first[i] = -1
        lst_last[i] = -1
        nbase[i] = 0
        vis_stamp[i] = -1
        ptr_stamp[i] = -1

    for it in range(iters):
        y = -1
        visited[0] = x
        n_visited = 1
        vis_stamp[x] = it
        ptr_stamp[x] = it
        cur[x] = lst_first[x]
        stack[0] = x
        stack_top = 1
        while stack_top > 0:
            v = stack[stack_top - 1]
            if ptr_stamp[v] != it:
                ptr_stamp[v] = it
                cur[v] = lst_first[v]
            a = cur[v]
            if a != -1:
                cur[v] = a_next[a]
            else:
                if split:
                    if v == x2:
                        bv = split_x
                        dv = indptr[bv + 1] - indptr[bv]
                    elif v % 2 == 0:
                        bv = -1
                        dv = 1
                    else:
                        bv = v >> 1
                        dv = indptr[bv + 1] - indptr[bv]
                else:
                    bv = v
                    dv = indptr[v + 1] - indptr[v]
                nb = nbase[v]
                if nb >= dv:
                    stack_top -= 1
                    continue
                nbase[v] = nb + 1
                if split:
                    if bv == -1:
                        h = v | 1
                    else:
                        h = heads[indptr[bv] + nb] << 1
                else:
                    h = heads[indptr[v] + nb]
                queries += 1
                a = n_arcs
                n_arcs += 1
                a_tail[a] = v
                a_head[a] = h
                a_marked[a] = 0
                a_next[a] = -1
                a_prev[a] = lst_last[v]
                if lst_last[v] != -1:
                    a_next[lst_last[v]] = a
                else:
                    lst_first[v] = a
                lst_last[v] = a
            if not a_marked[a]:
                a_marked[a] = 1
                marked += 1
                if marked >= cap:
                    status = STATUS_CAP
                    for i in range(14):
                        free(<void *><size_t>bufs[i])
                    return STATUS_CAP, None, queries, marked
                state = state + GOLDEN
                if _mix64(state) < thr:
                    y = v
                    break
            b = a_head[a]
            if vis_stamp[b] != it:
                vis_stamp[b] = it
                parent[b] = a
                ptr_stamp[b] = it
                cur[b] = lst_first[b]
                visited[n_visited] = b
                n_visited += 1
                stack[stack_top] = b
                stack_top += 1
        if y == -1:
            if n_visited >= real_n:
                for i in range(14):
                    free(<void *><size_t>bufs[i])
                return STATUS_FULL, None, queries, marked
            result = [visited[i] for i in range(n_visited)]
            for i in range(14):
                free(<void *><size_t>bufs[i])
            return STATUS_CUT, result, queries, marked
        v = y
        while v != x:
            a = parent[v]
            u = a_tail[a]
            p = a_prev[a]
            nx = a_next[a]
            if p != -1:
                a_next[p] = nx
            else:
                lst_first[u] = nx
            if nx != -1:
                a_prev[nx] = p
            else:
                lst_last[u] = p
            a_tail[a] = v
            a_head[a] = u
            a_prev[a] = lst_last[v]
            a_next[a] = -1
            if lst_last[v] != -1:
                a_next[lst_last[v]] = a
            else:
                lst_first[v] = a
            lst_last[v] = a
            v = u
    for i in range(14):
        free(<void *><size_t>bufs[i])
    return STATUS_EXHAUSTED, None, queries, marked


def local_ec_alt_run(indptr_obj, heads_obj, i64 n_base, bint split,
                     i64 split_x, i64 x, i64 iters, i64 budget, u64 seed):
    cdef i64[:] indptr = np.ascontiguousarray(indptr_obj, dtype=np.int64)
    cdef i64[:] heads = np.ascontiguousarray(heads_obj, dtype=np.int64)
    cdef i64 n_ids, real_n, x2, m_eff
    if split:
        n_ids = 2 * n_base
        real_n = 2 * n_base - 1
        x2 = 2 * split_x
        m_eff = indptr[n_base] + n_base - 1
    else:
        n_ids = n_base
        real_n = n_base
        x2 = -2
        m_eff = indptr[n_base]
    cdef i64 alloc = m_eff + 1

    cdef i64 *a_tail = <i64 *>malloc(alloc * sizeof(i64))
    cdef i64 *a_head = <i64 *>malloc(alloc * sizeof(i64))
    cdef i64 *a_next = <i64 *>malloc(alloc * sizeof(i64))
    cdef i64 *a_prev = <i64 *>malloc(alloc * sizeof(i64))
    cdef i64 *lst_first = <i64 *>malloc(n_ids * sizeof(i64))
    cdef i64 *lst_last = <i64 *>malloc(n_ids * sizeof(i64))
    cdef i64 *nbase = <i64 *>malloc(n_ids * sizeof(i64))
    cdef i64 *vis_stamp = <i64 *>malloc(n_ids * sizeof(i64))
    cdef i64 *ptr_stamp = <i64 *>malloc(n_ids * sizeof(i64))
    cdef i64 *cur = <i64 *>malloc(n_ids * sizeof(i64))
    cdef i64 *parent = <i64 *>malloc(n_ids * sizeof(i64))
    cdef i64 *stack = <i64 *>malloc(n_ids * sizeof(i64))
    cdef i64 *visited = <i64 *>malloc(n_ids * sizeof(i64))
    cdef i64 *pass_arcs = <i64 *>malloc((budget + 1) * sizeof(i64))
    bufs = [<size_t>a_tail, <size_t>a_head, <size_t>a_next, <size_t>a_prev,
            <size_t>lst_first, <size_t>lst_last, <size_t>nbase,
            <size_t>vis_stamp, <size_t>ptr_stamp, <size_t>cur,
            <size_t>parent, <size_t>stack, <size_t>visited,
            <size_t>pass_arcs]

    cdef i64 i, it, v, a, u, y, b, h, bv, dv, nb, p, nx
    cdef i64 n_arcs = 0, queries = 0, visited_total = 0
    cdef i64 stack_top, n_visited, n_pass
    cdef u64 state = seed
    cdef object result = None

    for i in range(n_ids):
        lst_first[i] = -1
        lst_last[i] = -1
        nbase[i] = 0
        vis_stamp[i] = -1
        ptr_stamp[i] = -1

    for it in range(iters):
        visited[0] = x
        n_visited = 1
        vis_stamp[x] = it
        ptr_stamp[x] = it
        cur[x] = lst_first[x]
        stack[0] = x
        stack_top = 1
        n_pass = 0
        while stack_top > 0 and n_pass < budget:
            v = stack[stack_top - 1]
            if ptr_stamp[v] != it:
                ptr_stamp[v] = it
                cur[v] = lst_first[v]
            a = cur[v]
            if a != -1:
                cur[v] = a_next[a]
            else:
                if split:
                    if v == x2:
                        bv = split_x
                        dv = indptr[bv + 1] - indptr[bv]
                    elif v % 2 == 0:
                        bv = -1
                        dv = 1
                    else:
                        bv = v >> 1
                        dv = indptr[bv + 1] - indptr[bv]
                else:
                    bv = v
                    dv = indptr[v + 1] - indptr[v]
                nb = nbase[v]
                if nb >= dv:
                    stack_top -= 1
                    continue
                nbase[v] = nb + 1
                if split:
                    if bv == -1:
                        h = v | 1
                    else:
                        h = heads[indptr[bv] + nb] << 1
                else:
                    h = heads[indptr[v] + nb]
                queries += 1
                a = n_arcs
                n_arcs += 1
                a_tail[a] = v
                a_head[a] = h
                a_next[a] = -1
                a_prev[a] = lst_last[v]
                if lst_last[v] != -1:
                    a_next[lst_last[v]] = a
                else:
                    lst_first[v] = a
                lst_last[v] = a
            pass_arcs[n_pass] = a
            n_pass += 1
            b = a_head[a]
            if vis_stamp[b] != it:
                vis_stamp[b] = it
                parent[b] = a
                ptr_stamp[b] = it
                cur[b] = lst_first[b]
                visited[n_visited] = b
                n_visited += 1
                stack[stack_top] = b
                stack_top += 1
        visited_total += n_pass
        if n_pass < budget:
            if n_visited >= real_n:
                for i in range(14):
                    free(<void *><size_t>bufs[i])
                return STATUS_FULL, None, queries, visited_total
            result = [visited[i] for i in range(n_visited)]
            for i in range(14):
                free(<void *><size_t>bufs[i])
            return STATUS_CUT, result, queries, visited_total
        state = state + GOLDEN
        y = a_head[pass_arcs[_mix64(state) % <u64>budget]]
        v = y
        while v != x:
            a = parent[v]
            u = a_tail[a]
            p = a_prev[a]
            nx = a_next[a]
            if p != -1:
                a_next[p] = nx
            else:
                lst_first[u] = nx
            if nx != -1:
                a_prev[nx] = p
            else:
                lst_last[u] = p
            a_tail[a] = v
            a_head[a] = u
            a_prev[a] = lst_last[v]
            a_next[a] = -1
            if lst_last[v] != -1:
                a_next[lst_last[v]] = a
            else:
                lst_first[v] = a
            lst_last[v] = a
            v = u
    for i in range(14):
        free(<void *><size_t>bufs[i])
    return STATUS_EXHAUSTED, None, queries, visited_total


def max_flow_capped(i64 n, efrom_obj, eto_obj, ecap_obj, i64 s, i64 t,
                    i64 cap):
    cdef i64[:] efrom = np.ascontiguousarray(efrom_obj, dtype=np.int64)
    cdef i64[:] eto = np.ascontiguousarray(eto_obj, dtype=np.int64)
    cdef i64[:] ecap = np.ascontiguousarray(ecap_obj, dtype=np.int64)
    cdef i64 m = efrom.shape[0]

    cdef i64 *res = <i64 *>malloc(2 * m * sizeof(i64) if m else sizeof(i64))
    cdef i64 *other = <i64 *>malloc(2 * m * sizeof(i64) if m else sizeof(i64))
    # residual adjacency as CSR over edge ids
    cdef i64 *deg = <i64 *>malloc((n + 1) * sizeof(i64))
    cdef i64 *aptr = <i64 *>malloc((n + 1) * sizeof(i64))
    cdef i64 *alist = <i64 *>malloc(2 * m * sizeof(i64) if m else sizeof(i64))
    cdef i64 *fill = <i64 *>malloc(n * sizeof(i64))
    cdef i64 *prev_edge = <i64 *>malloc(n * sizeof(i64))
    cdef i64 *queue = <i64 *>malloc(n * sizeof(i64))
    cdef char *seen = <char *>malloc(n)
    bufs = [<size_t>res, <size_t>other, <size_t>deg, <size_t>aptr,
            <size_t>alist, <size_t>fill, <size_t>prev_edge, <size_t>queue,
            <size_t>seen]

    cdef i64 i, v, w, e, qi, qn, value, bottleneck
    cdef bint found

    for i in range(m):
        res[2 * i] = ecap[i]
        res[2 * i + 1] = 0
        other[2 * i] = eto[i]
        other[2 * i + 1] = efrom[i]
    for i in range(n + 1):
        deg[i] = 0
    for i in range(m):
        deg[efrom[i]] += 1
        deg[eto[i]] += 1
    aptr[0] = 0
    for i in range(n):
        aptr[i + 1] = aptr[i] + deg[i]
        fill[i] = aptr[i]
    # adjacency in edge-id order, matching the Python kernel's append order
    for i in range(m):
        alist[fill[efrom[i]]] = 2 * i
        fill[efrom[i]] += 1
    for i in range(m):
        alist[fill[eto[i]]] = 2 * i + 1
        fill[eto[i]] += 1

    value = 0
    while value < cap:
        for i in range(n):
            prev_edge[i] = -1
        prev_edge[s] = -2
        queue[0] = s
        qn = 1
        qi = 0
        found = False
        while qi < qn and not found:
            v = queue[qi]
            qi += 1
            for i in range(aptr[v], aptr[v + 1]):
                e = alist[i]
                if res[e] <= 0:
                    continue
                w = other[e]
                if prev_edge[w] != -1:
                    continue
                prev_edge[w] = e
                if w == t:
                    found = True
                    break
                queue[qn] = w
                qn += 1
        if not found:
            break
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
        for i in range(9):
            free(<void *><size_t>bufs[i])
        return value, None
    for i in range(n):
        seen[i] = 0
    seen[s] = 1
    queue[0] = s
    qn = 1
    qi = 0
    while qi < qn:
        v = queue[qi]
        qi += 1
        for i in range(aptr[v], aptr[v + 1]):
            e = alist[i]
            w = other[e]
            if res[e] > 0 and not seen[w]:
                seen[w] = 1
                queue[qn] = w
                qn += 1
    reachable = [v for v in range(n) if seen[v]]
    for i in range(9):
        free(<void *><size_t>bufs[i])
    return value, reachable
