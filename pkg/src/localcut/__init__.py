"""Randomized local cut detection and its applications.

A local search from a seed vertex finds small edge or vertex cuts whose
near side has bounded volume, touching only that neighborhood of the
graph.  On top of the primitive: global vertex connectivity, one-sided
property testers for k-edge/k-vertex-connectivity, and maximal
k-edge-connected subgraph partitions, all checked against brute-force
oracles.
"""

__version__ = "0.1.0"

from .graph import (
    DirectedGraph,
    GraphFormatError,
    PreconditionError,
    SeparationTriple,
    cut_size,
    is_separation_triple,
    load_graph,
    parse_graph,
    serialize_graph,
    sparse_certificate,
    strongly_connected_components,
    vol_out,
)
from .kernel import KERNEL_IMPL
from .local_ec import (
    CutOutcome,
    gap_local_ec,
    local_ec,
    local_ec_alt,
    local_ec_approx,
    local_ec_boosted,
    local_ec_exact,
)
from .local_vc import VertexCutOutcome, gap_local_vc, local_vc
from .maxflow import st_edge_cut_capped, st_vertex_cut_capped
from .global_vc import (
    even_sweep_vertex_connectivity,
    exact_vertex_connectivity_search,
    vertex_connectivity_check,
)
from .kecs import max_kecs_directed, max_kecs_undirected
from .testing import (
    TesterConfig,
    TesterVerdict,
    test_k_edge_bounded,
    test_k_edge_unbounded,
    test_k_vertex_bounded,
    test_k_vertex_unbounded,
    verify_far_certificate,
)
from .rng import SplitMix64, derive_seed

__all__ = [
    "DirectedGraph",
    "GraphFormatError",
    "PreconditionError",
    "SeparationTriple",
    "CutOutcome",
    "VertexCutOutcome",
    "TesterConfig",
    "TesterVerdict",
    "KERNEL_IMPL",
    "SplitMix64",
    "derive_seed",
    "cut_size",
    "vol_out",
    "is_separation_triple",
    "load_graph",
    "parse_graph",
    "serialize_graph",
    "sparse_certificate",
    "strongly_connected_components",
    "local_ec",
    "local_ec_exact",
    "local_ec_approx",
    "local_ec_boosted",
    "local_ec_alt",
    "gap_local_ec",
    "local_vc",
    "gap_local_vc",
    "st_edge_cut_capped",
    "st_vertex_cut_capped",
    "even_sweep_vertex_connectivity",
    "vertex_connectivity_check",
    "exact_vertex_connectivity_search",
    "max_kecs_directed",
    "max_kecs_undirected",
    "test_k_edge_unbounded",
    "test_k_edge_bounded",
    "test_k_vertex_unbounded",
    "test_k_vertex_bounded",
    "verify_far_certificate",
]
