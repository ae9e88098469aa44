"""Graph generators: canonical benchmark instances, random graphs, and
planted families that are eps-far from k-connectivity together with
verifiable farness certificates."""

import math
from dataclasses import dataclass, field

from .graph import DirectedGraph, SeparationTriple, cut_size
from .rng import SplitMix64


def clique(n):
    """Complete digraph on n vertices (both arc directions)."""
    arcs = [(u, v) for u in range(n) for v in range(n) if u != v]
    return DirectedGraph.from_arcs(n, arcs)


def undirected_clique(n):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return DirectedGraph.from_undirected_edges(n, edges)


def cycle(n, undirected=False):
    if undirected:
        return DirectedGraph.from_undirected_edges(
            n, [(i, (i + 1) % n) for i in range(n)])
    return DirectedGraph.from_arcs(n, [(i, (i + 1) % n) for i in range(n)])


def circulant(n, offsets, undirected=False):
    """Vertex i connects to i+off mod n for each offset."""
    if undirected:
        edges = {tuple(sorted((i, (i + off) % n)))
                 for i in range(n) for off in offsets
                 if (i + off) % n != i}
        return DirectedGraph.from_undirected_edges(n, sorted(edges))
    arcs = [(i, (i + off) % n) for i in range(n) for off in offsets
            if (i + off) % n != i]
    return DirectedGraph.from_arcs(n, arcs)


def pendant_instance(core=30):
    """Undirected clique on `core` vertices plus a path core-1 -- a -- b.

    Vertex a = core, b = core + 1.  The unique minimum cut around b has
    size 1; the interesting local cut is ({a, b}, rest) of size 1 seen
    from seed b with small volume.  Default core=30 gives m = 874 arcs.
    """
    edges = [(u, v) for u in range(core) for v in range(u + 1, core)]
    a, b = core, core + 1
    edges.append((core - 1, a))
    edges.append((a, b))
    return DirectedGraph.from_undirected_edges(core + 2, edges)


def two_clique_instance(small=4, big=700):
    """Two undirected cliques joined through one cut vertex.

    Vertices 0..small-1 form a clique, vertex `small` is the articulation
    point, and small+1 .. small+big form a clique.  The articulation
    vertex is adjacent to everything.  Minimum vertex cut = {small}.
    """
    s = small
    n = small + big + 1
    edges = [(u, v) for u in range(s) for v in range(u + 1, s)]
    edges += [(u, s) for u in range(s)]
    edges += [(u, v) for u in range(s + 1, n) for v in range(u + 1, n)]
    edges += [(s, v) for v in range(s + 1, n)]
    return DirectedGraph.from_undirected_edges(n, edges)


def fig5_instance():
    """Seven-vertex, 12-edge undirected graph: a K4 core (0..3) plus
    three outer vertices, each attached to two core vertices.  Its
    maximal 3-edge-connected subgraphs are {0,1,2,3} and three
    singletons, and the core is not 3-edge-connected in the sparse
    certificate built from this graph, which is what makes the instance
    interesting for the decomposition algorithm."""
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
             (4, 0), (4, 1), (5, 1), (5, 2), (6, 2), (6, 3)]
    return DirectedGraph.from_undirected_edges(7, edges)


def random_digraph(n, m, seed, simple=True):
    rng = SplitMix64(seed)
    arcs = []
    seen = set()
    guard = 0
    while len(arcs) < m:
        u = rng.below(n)
        v = rng.below(n)
        guard += 1
        if guard > 50 * m + 1000:
            break
        if u == v:
            continue
        if simple and (u, v) in seen:
            continue
        seen.add((u, v))
        arcs.append((u, v))
    return DirectedGraph.from_arcs(n, arcs)


def random_undirected(n, m, seed):
    rng = SplitMix64(seed)
    edges = []
    seen = set()
    guard = 0
    while len(edges) < m:
        u = rng.below(n)
        v = rng.below(n)
        guard += 1
        if guard > 50 * m + 1000:
            break
        if u == v:
            continue
        key = (min(u, v), max(u, v))
        if key in seen:
            continue
        seen.add(key)
        edges.append(key)
    return DirectedGraph.from_undirected_edges(n, edges)


@dataclass
class PlantedInstance:
    graph: DirectedGraph
    k: int
    eps: float
    certificate: list = field(default_factory=list)
    kind: str = "edge"
    degree_bound: int | None = None


def planted_far_edge(k=2, gadgets=40, core=40):
    """Complete-digraph core plus `gadgets` disconnected directed
    4-cycles.  Each gadget has out-cut 0, so the family of gadget vertex
    sets certifies eps-farness from k-edge-connectivity for any
    eps < gadgets*k / m."""
    arcs = [(u, v) for u in range(core) for v in range(core) if u != v]
    n = core
    family = []
    for _ in range(gadgets):
        base = n
        n += 4
        for i in range(4):
            arcs.append((base + i, base + (i + 1) % 4))
        family.append(frozenset(range(base, base + 4)))
    graph = DirectedGraph.from_arcs(n, arcs)
    eps = (gadgets * k) / graph.m * 0.8
    return PlantedInstance(graph, k, eps, family, "edge")


def planted_far_edge_bounded(k=2, gadgets=60, blocks=12, d=8):
    """Degree-bounded variant: disjoint complete digraphs of size d/2+1
    (so in/out degree d/2 <= d) plus disconnected 4-cycle gadgets.  The
    farness denominator in the bounded model is n*d."""
    size = d // 2 + 1
    arcs = []
    n = 0
    for _ in range(blocks):
        base = n
        n += size
        arcs += [(base + u, base + v) for u in range(size)
                 for v in range(size) if u != v]
    family = []
    for _ in range(gadgets):
        base = n
        n += 4
        for i in range(4):
            arcs.append((base + i, base + (i + 1) % 4))
        family.append(frozenset(range(base, base + 4)))
    graph = DirectedGraph.from_arcs(n, arcs)
    eps = (gadgets * k) / (n * d) * 0.8
    return PlantedInstance(graph, k, eps, family, "edge", degree_bound=d)


def planted_far_vertex(k=2, gadgets=40, core=40):
    """Complete-digraph core plus isolated directed 4-cycles.  Each gadget
    yields a separation triple (gadget, empty cut, rest) with deficiency
    k, certifying eps-farness from k-vertex-connectivity."""
    inst = planted_far_edge(k=k, gadgets=gadgets, core=core)
    graph = inst.graph
    family = []
    for side in inst.certificate:
        left = frozenset(side)
        right = frozenset(range(graph.n)) - left
        family.append(SeparationTriple(left, frozenset(), right))
    return PlantedInstance(graph, k, inst.eps, family, "vertex")


def planted_far_vertex_bounded(k=2, gadgets=60, blocks=12, d=8):
    inst = planted_far_edge_bounded(k=k, gadgets=gadgets, blocks=blocks, d=d)
    graph = inst.graph
    family = []
    for side in inst.certificate:
        left = frozenset(side)
        right = frozenset(range(graph.n)) - left
        family.append(SeparationTriple(left, frozenset(), right))
    return PlantedInstance(graph, k, inst.eps, family, "vertex",
                           degree_bound=d)


def low_degree_circulant(k, n=None):
    """Directed circulant with uniform out-degree k - 1: every vertex is a
    degree witness against k-edge-connectivity, so it is eps-far for any
    eps < 1/(k-1) and testers reject in the degree-sampling phase.  Used
    to measure query scaling in k."""
    if k < 2:
        raise ValueError("needs k >= 2 so that out-degree k-1 >= 1")
    if n is None:
        n = max(4 * k, 64)
    return circulant(n, list(range(1, k)))
