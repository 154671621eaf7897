# src/seifert/__init__.py
"""
Signed Seifert graphs.

Public API:
    build_seifert_graph(d) -> SignedGraph
    block_decomposition(g) -> list[Block]
    analyze(g) -> GraphAnalysis
    positive_components(g) -> int
    prop_key_rhs(d) -> int
    traczyk_signature(d, tree=None) -> int
    spanning_trees(g) -> iterator of edge tuples
"""
from src.seifert.graph import (
    Block,
    BlockSign,
    GraphAnalysis,
    SignedEdge,
    SignedGraph,
    analyze,
    block_decomposition,
    build_seifert_graph,
    positive_components,
)
from src.seifert.signature import prop_key_rhs, spanning_trees, traczyk_signature

__all__ = [
    "Block",
    "BlockSign",
    "GraphAnalysis",
    "SignedEdge",
    "SignedGraph",
    "analyze",
    "block_decomposition",
    "build_seifert_graph",
    "positive_components",
    "prop_key_rhs",
    "spanning_trees",
    "traczyk_signature",
]
