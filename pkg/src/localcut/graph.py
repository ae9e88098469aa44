"""Graph containers, file I/O and structural helpers.

Graphs are immutable CSR adjacency structures over vertices 0..n-1.
Undirected graphs are stored as symmetric digraphs (each edge becomes two
arcs) and remember their origin through ``undirected_origin``.
"""

from dataclasses import dataclass

import numpy as np


class GraphFormatError(ValueError):
    """Raised for malformed graph files."""


class PreconditionError(ValueError):
    """Raised in strict mode when a parameter precondition fails."""


class DirectedGraph:
    """CSR digraph: ``heads[indptr[v]:indptr[v+1]]`` are v's out-neighbors.

    Arc ids are CSR positions.  ``tails[a]`` recovers the tail of arc a,
    which makes uniform arc sampling O(1).  Parallel arcs and self-loops
    are allowed; self-loops count toward volume but never toward cuts.
    """

    __slots__ = ("n", "m", "indptr", "heads", "tails", "undirected_origin", "_rev")

    def __init__(self, n, indptr, heads, undirected_origin=False):
        self.n = int(n)
        self.indptr = np.asarray(indptr, dtype=np.int64)
        self.heads = np.asarray(heads, dtype=np.int64)
        self.m = int(self.heads.shape[0])
        if self.indptr.shape[0] != self.n + 1 or self.indptr[-1] != self.m:
            raise GraphFormatError("inconsistent CSR arrays")
        self.tails = np.repeat(np.arange(self.n, dtype=np.int64),
                               np.diff(self.indptr))
        self.undirected_origin = undirected_origin
        self._rev = None

    @classmethod
    def from_arcs(cls, n, arcs, undirected_origin=False):
        """Build from an iterable of (tail, head) pairs, keeping the given
        order within each tail's list."""
        n = int(n)
        deg = [0] * n
        arcs = list(arcs)
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError("arc endpoint out of range")
            deg[u] += 1
        indptr = np.zeros(n + 1, dtype=np.int64)
        indptr[1:] = np.cumsum(deg)
        heads = np.empty(len(arcs), dtype=np.int64)
        fill = indptr[:-1].copy()
        for u, v in arcs:
            heads[fill[u]] = v
            fill[u] += 1
        return cls(n, indptr, heads, undirected_origin)

    @classmethod
    def from_undirected_edges(cls, n, edges):
        """Each undirected edge {u, v} expands to arcs (u, v) and (v, u)."""
        arcs = []
        for u, v in edges:
            arcs.append((u, v))
            if u != v:
                arcs.append((v, u))
            else:
                arcs.append((u, u))
        return cls.from_arcs(n, arcs, undirected_origin=True)

    def out_degree(self, v):
        return int(self.indptr[v + 1] - self.indptr[v])

    def head(self, v, slot):
        return int(self.heads[self.indptr[v] + slot])

    def out_arcs(self, v):
        return self.heads[self.indptr[v]:self.indptr[v + 1]]

    def arc(self, a):
        return int(self.tails[a]), int(self.heads[a])

    def arcs(self):
        for a in range(self.m):
            yield int(self.tails[a]), int(self.heads[a])

    def reverse(self):
        """Graph with all arcs reversed (cached)."""
        if self._rev is None:
            rev = DirectedGraph.from_arcs(
                self.n,
                zip(self.heads.tolist(), self.tails.tolist()),
                undirected_origin=self.undirected_origin,
            )
            rev._rev = self
            self._rev = rev
        return self._rev

    def min_out_degree(self):
        degs = np.diff(self.indptr)
        v = int(np.argmin(degs)) if self.n else 0
        return v, int(degs[v]) if self.n else 0

    def out_neighbors(self, v):
        """Distinct out-neighbors excluding v itself."""
        return sorted({int(h) for h in self.out_arcs(v) if int(h) != v})

    def has_arc(self, u, v):
        return any(int(h) == v for h in self.out_arcs(u))

    def subgraph_without_vertices(self, removed):
        """Drop the given vertex set and all incident arcs; vertex ids are
        preserved (removed vertices stay as isolated ghost slots is NOT
        done: instead a compacted subgraph plus id mapping is returned)."""
        removed = set(removed)
        keep = [v for v in range(self.n) if v not in removed]
        return self.induced_subgraph(keep)

    def induced_subgraph(self, vertices):
        """Compacted induced subgraph; returns (graph, old_ids) where
        old_ids[new] = old."""
        old_ids = list(vertices)
        pos = {v: i for i, v in enumerate(old_ids)}
        arcs = []
        for v in old_ids:
            for h in self.out_arcs(v):
                h = int(h)
                if h in pos:
                    arcs.append((pos[v], pos[h]))
        g = DirectedGraph.from_arcs(len(old_ids), arcs, self.undirected_origin)
        return g, old_ids

    def without_arcs(self, arc_ids):
        """Copy with the given arc ids removed (same vertex set)."""
        drop = set(int(a) for a in arc_ids)
        arcs = [(int(self.tails[a]), int(self.heads[a]))
                for a in range(self.m) if a not in drop]
        return DirectedGraph.from_arcs(self.n, arcs, self.undirected_origin)


def vol_out(graph, vertices):
    """Sum of out-degrees over the set (self-loops included)."""
    return sum(graph.out_degree(v) for v in set(vertices))


def cut_size(graph, vertices):
    """|E(S, V-S)|: arcs leaving the set; self-loops never cross."""
    s = set(vertices)
    total = 0
    for v in s:
        for h in graph.out_arcs(v):
            if int(h) not in s:
                total += 1
    return total


def cut_arcs(graph, vertices):
    """Arc ids leaving the set."""
    s = set(vertices)
    out = []
    for v in s:
        for a in range(graph.indptr[v], graph.indptr[v + 1]):
            if int(graph.heads[a]) not in s:
                out.append(int(a))
    return out


def out_neighborhood(graph, vertices):
    """N_out(S): distinct vertices outside S hit by arcs from S."""
    s = set(vertices)
    nbrs = set()
    for v in s:
        for h in graph.out_arcs(v):
            h = int(h)
            if h not in s:
                nbrs.add(h)
    return nbrs


@dataclass(frozen=True)
class SeparationTriple:
    """Partition (L, S, R) with no arcs from L to R; S is the vertex cut."""

    left: frozenset
    cut: frozenset
    right: frozenset

    def size(self):
        return len(self.cut)


def is_separation_triple(graph, left, cut, right):
    left, cut, right = set(left), set(cut), set(right)
    if not left or not right:
        return False
    if left & cut or left & right or cut & right:
        return False
    if len(left) + len(cut) + len(right) != graph.n:
        return False
    for v in left:
        for h in graph.out_arcs(v):
            if int(h) in right:
                return False
    return True


def make_separation_triple(graph, left):
    """Triple (L, N_out(L), rest); returns None when the rest is empty."""
    left = set(left)
    cut = out_neighborhood(graph, left)
    right = set(range(graph.n)) - left - cut
    if not right or not left:
        return None
    return SeparationTriple(frozenset(left), frozenset(cut), frozenset(right))


# ---------------------------------------------------------------------------
# File grammar: '#' comments, a 'p <n> <m> directed|undirected' header and
# m lines 'e <u> <v>'.  Undirected files list each edge once.
# ---------------------------------------------------------------------------

def parse_graph(text):
    n = m = None
    directed = True
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphFormatError(f"line {lineno}: duplicate header")
            if len(parts) != 4 or parts[3] not in ("directed", "undirected"):
                raise GraphFormatError(f"line {lineno}: bad header")
            n, m = int(parts[1]), int(parts[2])
            directed = parts[3] == "directed"
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError(f"line {lineno}: edge before header")
            if len(parts) != 3:
                raise GraphFormatError(f"line {lineno}: bad edge line")
            u, v = int(parts[1]), int(parts[2])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"line {lineno}: endpoint out of range")
            edges.append((u, v))
        else:
            raise GraphFormatError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise GraphFormatError("missing header")
    if len(edges) != m:
        raise GraphFormatError(f"header says m={m}, found {len(edges)} edges")
    if directed:
        return DirectedGraph.from_arcs(n, edges)
    return DirectedGraph.from_undirected_edges(n, edges)


def load_graph(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def serialize_graph(graph):
    lines = []
    if graph.undirected_origin:
        edges = undirected_edge_list(graph)
        lines.append(f"p {graph.n} {len(edges)} undirected")
        lines.extend(f"e {u} {v}" for u, v in edges)
    else:
        lines.append(f"p {graph.n} {graph.m} directed")
        lines.extend(f"e {int(graph.tails[a])} {int(graph.heads[a])}"
                     for a in range(graph.m))
    return "\n".join(lines) + "\n"


def undirected_edge_list(graph):
    """Recover one record per undirected edge from a symmetric digraph."""
    from collections import Counter

    fwd = Counter()
    for a in range(graph.m):
        u, v = int(graph.tails[a]), int(graph.heads[a])
        fwd[(u, v)] += 1
    edges = []
    for (u, v), c in sorted(fwd.items()):
        if u < v:
            if fwd.get((v, u), 0) != c:
                raise GraphFormatError("graph is not symmetric")
            edges.extend([(u, v)] * c)
        elif u == v:
            if c % 2:
                raise GraphFormatError("odd self-loop multiplicity")
            edges.extend([(u, u)] * (c // 2))
    return edges


def graph_stats(graph):
    degs = np.diff(graph.indptr)
    return {
        "n": graph.n,
        "m": graph.m,
        "directed": not graph.undirected_origin,
        "min_out_degree": int(degs.min()) if graph.n else 0,
        "max_out_degree": int(degs.max()) if graph.n else 0,
        "mean_out_degree": float(degs.mean()) if graph.n else 0.0,
        "self_loops": int(sum(1 for a in range(graph.m)
                              if graph.tails[a] == graph.heads[a])),
    }


# ---------------------------------------------------------------------------
# Strongly connected components (iterative Tarjan).
# ---------------------------------------------------------------------------

def strongly_connected_components(graph):
    """SCCs in reverse topological order, each a sorted vertex list."""
    n = graph.n
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack = []
    comps = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            base = graph.indptr[v]
            deg = graph.indptr[v + 1] - base
            while pi < deg:
                w = int(graph.heads[base + pi])
                pi += 1
                if index[w] == -1:
                    work[-1] = (v, pi)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
            if work:
                u, _ = work[-1]
                low[u] = min(low[u], low[v])
    return comps


# ---------------------------------------------------------------------------
# Split graph encoding (arithmetic, no materialization).
#
# For a digraph on n vertices and a distinguished vertex x the split graph
# has v_in = 2v and v_out = 2v + 1 for v != x, while x keeps a single node
# 2x (2x + 1 is an unused id).  Arcs: (v_in, v_out) for v != x, and
# (u_out, v_in) for every arc (u, v).  Sizes: n' = 2n - 1, m' = m + n - 1.
# ---------------------------------------------------------------------------

class SplitAdjacency:
    """O(1) out-degree/head lookups in the split graph of ``graph`` at x."""

    __slots__ = ("graph", "x", "n_ids", "real_n", "m")

    def __init__(self, graph, x):
        self.graph = graph
        self.x = int(x)
        self.n_ids = 2 * graph.n
        self.real_n = 2 * graph.n - 1
        self.m = graph.m + graph.n - 1

    def node_of(self, v):
        """Split id standing for plain vertex v as a seed (x or v_in)."""
        return 2 * self.x if v == self.x else 2 * v

    def in_id(self, v):
        return 2 * v

    def out_id(self, v):
        return 2 * self.x if v == self.x else 2 * v + 1

    def is_out(self, node):
        return node == 2 * self.x or node % 2 == 1

    def base_vertex(self, node):
        return node // 2

    def out_degree(self, node):
        v = node // 2
        if node == 2 * self.x:
            return self.graph.out_degree(self.x)
        if node % 2 == 0:
            return 1  # the (v_in, v_out) arc
        return self.graph.out_degree(v)

    def head(self, node, slot):
        v = node // 2
        if node == 2 * self.x:
            return self.in_id(self.graph.head(self.x, slot))
        if node % 2 == 0:
            return 2 * v + 1
        return self.in_id(self.graph.head(v, slot))

    def members(self):
        """All real split ids."""
        for v in range(self.graph.n):
            yield 2 * v
            if v != self.x:
                yield 2 * v + 1


class PlainAdjacency:
    """Adapter giving DirectedGraph the same lookup surface as
    SplitAdjacency, for the shared kernels."""

    __slots__ = ("graph", "n_ids", "real_n", "m")

    def __init__(self, graph):
        self.graph = graph
        self.n_ids = graph.n
        self.real_n = graph.n
        self.m = graph.m

    def out_degree(self, node):
        return self.graph.out_degree(node)

    def head(self, node, slot):
        return self.graph.head(node, slot)


# ---------------------------------------------------------------------------
# Sparse certificate for k-connectivity of undirected graphs: the union of
# k successively peeled BFS spanning forests.  BFS (scan-first) forests
# preserve every edge cut and every vertex cut of size below k.
# ---------------------------------------------------------------------------

def sparse_certificate(graph, k):
    """Certificate subgraph with at most k(n-1) undirected edges."""
    if not graph.undirected_origin:
        raise GraphFormatError("sparse certificate needs an undirected graph")
    from collections import deque

    n = graph.n
    edges = undirected_edge_list(graph)
    # incidence by edge index so parallel edges peel independently
    inc = [[] for _ in range(n)]
    for idx, (u, v) in enumerate(edges):
        inc[u].append(idx)
        if v != u:
            inc[v].append(idx)
    used = [False] * len(edges)
    kept = []
    for _ in range(max(0, int(k))):
        seen = [False] * n
        forest = []
        for root in range(n):
            if seen[root]:
                continue
            seen[root] = True
            queue = deque([root])
            while queue:
                v = queue.popleft()
                for idx in inc[v]:
                    if used[idx]:
                        continue
                    u, w = edges[idx]
                    other = w if u == v else u
                    if other == v or seen[other]:
                        continue
                    used[idx] = True
                    seen[other] = True
                    forest.append(idx)
                    queue.append(other)
        if not forest:
            break
        kept.extend(forest)
    kept.sort()
    return DirectedGraph.from_undirected_edges(n, [edges[i] for i in kept])
