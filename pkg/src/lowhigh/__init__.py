"""Incremental low-high orders, certified dominator trees and their applications."""

from .graph import FlowGraph, IdOutOfRange, ParseError, load_graph, reverse
from .dominators import (
    DomTree,
    Unreachable,
    brute_force_dominators,
    certify_dominator_tree,
    compute_dominators,
    derived_graph,
    is_descendant,
    nca,
)
from .lowhigh import (
    ALPHA,
    BETA,
    DerivedAffectedGraph,
    SpanningTreePair,
    StuckPeel,
    auxiliary_low_high,
    greedy_peel_low_high,
    verify_flat_divergent,
    verify_low_high,
)
from .incremental import (
    AffectedReport,
    LowHighState,
    affected_search,
    baseline_slt,
    baseline_slt_nca,
    compute_low_high,
    initialize,
    insert_edge,
    insert_edge_simple,
)
from .applications import (
    InvalidForest,
    PathPair,
    ValidSet,
    query_avoiding_path,
    query_two_disjoint_paths,
    valid_set,
    verify_strongly_divergent,
)
from .twovcss import Not2VC, NotStronglyConnected, SubgraphResult, is_2vc, lh_z, scss_2approx

__version__ = "0.1.0"

__all__ = [
    "FlowGraph", "IdOutOfRange", "ParseError", "load_graph", "reverse", "DomTree",
    "Unreachable", "brute_force_dominators", "certify_dominator_tree", "compute_dominators",
    "derived_graph", "is_descendant", "nca", "ALPHA", "BETA", "DerivedAffectedGraph",
    "SpanningTreePair", "StuckPeel", "auxiliary_low_high", "greedy_peel_low_high",
    "verify_flat_divergent", "verify_low_high", "AffectedReport", "LowHighState",
    "affected_search", "baseline_slt", "baseline_slt_nca", "compute_low_high", "initialize",
    "insert_edge", "insert_edge_simple", "InvalidForest", "PathPair", "ValidSet",
    "query_avoiding_path", "query_two_disjoint_paths", "valid_set", "verify_strongly_divergent",
    "Not2VC", "NotStronglyConnected", "SubgraphResult", "is_2vc", "lh_z", "scss_2approx",
]
