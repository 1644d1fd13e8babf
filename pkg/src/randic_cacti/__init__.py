"""Zeroth-order general Randic index of digraphs and its extremal cactus orientations."""

from .cacti import build_extremal_orientations, build_G0, enumerate_cacti, extremal_set, fixtures
from .canon import canonical_label
from .graph import (
    Digraph,
    Graph,
    GraphFormatError,
    bipartition,
    cactus_profile,
    format_edge_list,
    orient,
    parse_digraph,
    parse_graph,
    reverse,
    validate,
)
from .index import Exponent, IndexValue, index_digraph, index_graph, theorem_bound, vdb_index
from .report import VerificationReport, emit_report
from .search import enumerate_orientations, max_orientation_bnb, max_orientation_exhaustive
from .verify import CLAIMS, run_claim

__all__ = [
    "CLAIMS",
    "Digraph",
    "Exponent",
    "Graph",
    "GraphFormatError",
    "IndexValue",
    "VerificationReport",
    "bipartition",
    "build_G0",
    "build_extremal_orientations",
    "cactus_profile",
    "canonical_label",
    "emit_report",
    "enumerate_cacti",
    "enumerate_orientations",
    "extremal_set",
    "fixtures",
    "format_edge_list",
    "index_digraph",
    "index_graph",
    "max_orientation_bnb",
    "max_orientation_exhaustive",
    "orient",
    "parse_digraph",
    "parse_graph",
    "reverse",
    "run_claim",
    "theorem_bound",
    "validate",
    "vdb_index",
]
