"""Planar graphs without the double star S_{2,4}: detection, certificates,
extremal constructions and exact small-n search."""

from .canon import canonical_form, canonical_labeling
from .certify import (
    CertificationFailure,
    DecompositionCertificate,
    LemmaHypothesisError,
    Part,
    PartKind,
    decompose,
    maximal_expansion,
    validate_certificate,
)
from .construct import (
    BlockKind,
    BlockTemplate,
    ConstructionError,
    TreeShape,
    assemble_pair,
    build_extremal,
    build_tree_shape,
    derive_block_library,
    load_block_library,
    path_shape,
    splice_block,
    star_shape,
)
from .formats import FormatError, from_edge_list, from_graph6, read_graph, to_edge_list, to_graph6, write_graph
from .graph import Graph, GraphError, induced_subgraph, passes_bound, weight2
from .patterns import (
    PatternKind,
    PatternMatch,
    contains_double_star,
    find_kl_edges,
    find_kls_paths,
    find_ks_star,
    is_free,
    triangles_on_edge,
)
from .planarity import euler_prefilter, is_planar
from .reduce import PeelResult, Verdict, bound_check, bound_status, check_bound_pipeline, peel
from .search import SearchResult, brute_force_contains, enumerate_triangulations, max_edges_exact

__version__ = "0.1.0"

__all__ = [
    "BlockKind",
    "BlockTemplate",
    "CertificationFailure",
    "ConstructionError",
    "DecompositionCertificate",
    "FormatError",
    "Graph",
    "GraphError",
    "LemmaHypothesisError",
    "Part",
    "PartKind",
    "PatternKind",
    "PatternMatch",
    "PeelResult",
    "SearchResult",
    "TreeShape",
    "Verdict",
    "assemble_pair",
    "bound_check",
    "bound_status",
    "brute_force_contains",
    "build_extremal",
    "build_tree_shape",
    "canonical_form",
    "canonical_labeling",
    "check_bound_pipeline",
    "contains_double_star",
    "decompose",
    "derive_block_library",
    "enumerate_triangulations",
    "euler_prefilter",
    "find_kl_edges",
    "find_kls_paths",
    "find_ks_star",
    "from_edge_list",
    "from_graph6",
    "induced_subgraph",
    "is_free",
    "is_planar",
    "load_block_library",
    "max_edges_exact",
    "maximal_expansion",
    "passes_bound",
    "path_shape",
    "peel",
    "read_graph",
    "splice_block",
    "star_shape",
    "to_edge_list",
    "to_graph6",
    "triangles_on_edge",
    "validate_certificate",
    "weight2",
    "write_graph",
]
