# src/seifert/signature.py
"""
Graph-side identities: the signed block-rank sum as a diagram formula, and
the spanning-tree signature formula for reduced alternating diagrams.
"""
import logging
from itertools import combinations
from typing import Iterator, Optional, Sequence

import networkx as nx
from networkx.utils import UnionFind

from src.diagram import (
    LinkDiagram,
    connected_count,
    is_alternating,
    is_reduced,
    nugatory_crossings,
    stats,
    writhe,
)
from src.errors import DisconnectedDiagram, NotAlternating, NotReduced
from src.seifert.graph import SignedEdge, SignedGraph, build_seifert_graph

logger = logging.getLogger("homfly_bounds.seifert")


def _require_connected(d: LinkDiagram) -> None:
    pieces = connected_count(d)
    if pieces != 1:
        raise DisconnectedDiagram(f"{d.name or 'diagram'} has {pieces} connected pieces")


def prop_key_rhs(d: LinkDiagram) -> int:
    """-s + w + 2*s_plus - 1 for a connected diagram."""
    _require_connected(d)
    st = stats(d)
    return -st.s + st.w + 2 * st.s_plus - 1


def spanning_trees(g: SignedGraph) -> Iterator[tuple[SignedEdge, ...]]:
    """Every spanning tree of a connected signed graph (parallel edges count separately)."""
    need = len(g.vertices) - 1
    if need < 0:
        return
    for subset in combinations(g.edges, need):
        uf = UnionFind(g.vertices)
        for e in subset:
            if uf[e.u] == uf[e.v]:
                break
            uf.union(e.u, e.v)
        else:
            yield subset


def _is_spanning_tree(g: SignedGraph, tree: Sequence[SignedEdge]) -> bool:
    if len(tree) != len(g.vertices) - 1 or not set(tree) <= set(g.edges):
        return False
    uf = UnionFind(g.vertices)
    for e in tree:
        if uf[e.u] == uf[e.v]:
            return False
        uf.union(e.u, e.v)
    return True


def traczyk_signature(d: LinkDiagram, tree: Optional[Sequence[SignedEdge]] = None) -> int:
    """
    Signature of a connected reduced alternating diagram: w - (d+ - d-), where
    d+ and d- count the positive and negative edges of a spanning tree of the
    Seifert graph. Positive trefoil -> +2.
    """
    _require_connected(d)
    if not is_alternating(d):
        raise NotAlternating(f"{d.name or 'diagram'} is not alternating")
    if not is_reduced(d):
        raise NotReduced(
            f"{d.name or 'diagram'} has nugatory crossings {nugatory_crossings(d)}"
        )

    g = build_seifert_graph(d)
    if tree is None:
        multi = g.to_networkx()
        tree = [
            SignedEdge(min(u, v), max(u, v), data["sign"], key)
            for u, v, key, data in nx.minimum_spanning_edges(multi, keys=True, data=True)
        ]
    elif not _is_spanning_tree(g, tree):
        raise ValueError("given edges are not a spanning tree of the Seifert graph")

    d_plus = sum(1 for e in tree if e.sign > 0)
    d_minus = len(tree) - d_plus
    sigma = writhe(d) - (d_plus - d_minus)
    logger.debug(f"Traczyk signature of {d.name or 'diagram'}: {sigma}")
    return sigma
