from conftest import small_graph_zoo
from localcut.generators import clique, random_digraph
from localcut.graph import DirectedGraph, cut_size
from localcut.maxflow import st_edge_cut_capped, st_vertex_cut_capped
from localcut.oracle import brute_local_ec


def test_edge_cut_on_path():
    g = DirectedGraph.from_arcs(4, [(0, 1), (1, 2), (2, 3)])
    res = st_edge_cut_capped(g, 0, 3, cap=5)
    assert res.value == 1 and not res.capped
    assert cut_size(g, res.source_side) == 1


def test_edge_cut_cap_signals():
    g = clique(6)
    res = st_edge_cut_capped(g, 0, 5, cap=3)
    assert res.capped and res.value >= 3


def test_edge_cut_matches_enumeration():
    for t in range(40):
        g = random_digraph(8, 24, 300 + t)
        res = st_edge_cut_capped(g, 0, 7, cap=30)
        if res.capped:
            continue
        # minimum s-t cut == smallest cut among sides containing s not t
        best = None
        for side in _sides_with_s_not_t(g, 0, 7):
            c = cut_size(g, side)
            best = c if best is None else min(best, c)
        assert best == res.value
        assert cut_size(g, res.source_side) == res.value
        assert 0 in res.source_side and 7 not in res.source_side


def _sides_with_s_not_t(g, s, t):
    others = [v for v in range(g.n) if v not in (s, t)]
    for mask in range(1 << len(others)):
        side = {s}
        for i, v in enumerate(others):
            if mask >> i & 1:
                side.add(v)
        yield side


def test_vertex_cut_adjacent_pair():
    g = clique(5)
    res = st_vertex_cut_capped(g, 0, 1, cap=10)
    assert res.adjacent


def test_vertex_cut_simple_separator():
    # 0 -> 1 -> 2 and 0 -> 3 -> 2: min vertex cut between 0 and 2 is 2
    g = DirectedGraph.from_arcs(4, [(0, 1), (1, 2), (0, 3), (3, 2)])
    res = st_vertex_cut_capped(g, 0, 2, cap=5)
    assert not res.adjacent and res.value == 2
    assert set(res.cut_vertices) == {1, 3}


def test_vertex_cut_disconnects():
    for t in range(30):
        g = random_digraph(9, 22, 600 + t)
        for s in range(g.n):
            for d in range(g.n):
                if s == d or g.has_arc(s, d):
                    continue
                res = st_vertex_cut_capped(g, s, d, cap=g.n)
                if res.capped or res.adjacent:
                    continue
                assert not _reaches_avoiding(g, s, d, res.cut_vertices)


def _reaches_avoiding(g, s, t, removed):
    removed = set(removed)
    seen = {s}
    stack = [s]
    while stack:
        v = stack.pop()
        if v == t:
            return True
        for w in g.out_neighbors(v):
            if w not in seen and w not in removed:
                seen.add(w)
                stack.append(w)
    return False
