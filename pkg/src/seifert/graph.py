# src/seifert/graph.py
"""
Signed Seifert graphs and their block decomposition.

Vertices are Seifert circles (circles through crossings first, ordered by
their smallest arc, then one isolated vertex per free unknot). Every crossing
contributes one edge between the two circles it touches, carrying the
crossing's sign. Parallel edges are kept.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import networkx as nx

from src.diagram import LinkDiagram, seifert_circles
from src.errors import InconsistentDiagram, NotHomogeneous

logger = logging.getLogger("homfly_bounds.seifert")


@dataclass(frozen=True)
class SignedEdge:
    u: int
    v: int
    sign: int
    crossing: int

    @property
    def ends(self) -> frozenset[int]:
        return frozenset((self.u, self.v))


@dataclass(frozen=True)
class SignedGraph:
    vertices: tuple[int, ...]
    edges: tuple[SignedEdge, ...] = ()

    def to_networkx(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        g.add_nodes_from(self.vertices)
        for e in self.edges:
            g.add_edge(e.u, e.v, key=e.crossing, sign=e.sign)
        return g

    def simple(self) -> nx.Graph:
        """Underlying simple graph (parallel edges collapsed)."""
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from((e.u, e.v) for e in self.edges)
        return g

    def without_negative_edges(self) -> "SignedGraph":
        return SignedGraph(self.vertices, tuple(e for e in self.edges if e.sign > 0))


class BlockSign(str, Enum):
    POSITIVE = "+"
    NEGATIVE = "-"
    MIXED = "mixed"

    @property
    def epsilon(self) -> Optional[int]:
        return {BlockSign.POSITIVE: 1, BlockSign.NEGATIVE: -1}.get(self)


@dataclass(frozen=True)
class Block:
    vertices: frozenset[int]
    edges: tuple[SignedEdge, ...]
    sign: BlockSign

    @property
    def rank(self) -> int:
        return -len(self.vertices) + len(self.edges) + 1

    def to_dict(self) -> dict:
        return {
            "vertices": sorted(self.vertices),
            "crossings": sorted(e.crossing for e in self.edges),
            "sign": self.sign.value,
            "rank": self.rank,
        }


def _block_sign(edges: tuple[SignedEdge, ...]) -> BlockSign:
    signs = {e.sign for e in edges}
    if signs == {-1}:
        return BlockSign.NEGATIVE
    if signs == {1, -1}:
        return BlockSign.MIXED
    # all-positive, or vertex-only
    return BlockSign.POSITIVE


@dataclass(frozen=True)
class GraphAnalysis:
    blocks: tuple[Block, ...]
    vertex_count: int
    edge_count: int
    component_count: int
    edge_signs: tuple[int, ...] = field(default=(), repr=False)

    @property
    def rank(self) -> int:
        return -self.vertex_count + self.edge_count + self.component_count

    @property
    def is_homogeneous(self) -> bool:
        return all(b.sign is not BlockSign.MIXED for b in self.blocks)

    @property
    def is_positive(self) -> bool:
        return all(s > 0 for s in self.edge_signs)

    @property
    def is_negative(self) -> bool:
        return all(s < 0 for s in self.edge_signs)

    @property
    def positive_blocks(self) -> int:
        return sum(1 for b in self.blocks if b.sign is BlockSign.POSITIVE)

    @property
    def negative_blocks(self) -> int:
        return sum(1 for b in self.blocks if b.sign is BlockSign.NEGATIVE)

    @property
    def eps_rank_sum(self) -> int:
        """Sum of epsilon(B) * rank(B) over all blocks; needs a homogeneous graph."""
        mixed = [b for b in self.blocks if b.sign is BlockSign.MIXED]
        if mixed:
            crossings = sorted(e.crossing for e in mixed[0].edges)
            raise NotHomogeneous(f"block on crossings {crossings} has mixed signs")
        return sum(b.sign.epsilon * b.rank for b in self.blocks)

    def to_dict(self) -> dict:
        return {
            "blocks": [b.to_dict() for b in self.blocks],
            "is_homogeneous": self.is_homogeneous,
            "is_positive": self.is_positive,
            "is_negative": self.is_negative,
            "rank": self.rank,
            "eps_rank_sum": self.eps_rank_sum if self.is_homogeneous else None,
            "component_count": self.component_count,
            "P": self.positive_blocks,
            "N": self.negative_blocks,
        }


def build_seifert_graph(d: LinkDiagram) -> SignedGraph:
    circles = seifert_circles(d)
    circle_of = circles.index_of()
    edges = []
    for ci, x in enumerate(d.crossings):
        u, v = circle_of[x.arcs[0]], circle_of[x.arcs[x.over_in]]
        if u == v:
            raise InconsistentDiagram(
                f"crossing {x.to_pd()} joins a Seifert circle to itself; the code is not planar"
            )
        edges.append(SignedEdge(min(u, v), max(u, v), x.sign, ci))
    return SignedGraph(tuple(range(circles.count)), tuple(edges))


def block_decomposition(g: SignedGraph) -> list[Block]:
    """
    Blocks of the graph: biconnected pieces of the underlying simple graph,
    bridges as single-edge blocks and isolated vertices as vertex-only blocks.
    Parallel edges go with the unique block containing both their ends.
    """
    simple = g.simple()
    blocks = []
    for nodes in nx.biconnected_components(simple):
        edges = tuple(e for e in g.edges if e.u in nodes and e.v in nodes)
        blocks.append(Block(frozenset(nodes), edges, _block_sign(edges)))
    for node in nx.isolates(simple):
        blocks.append(Block(frozenset((node,)), (), BlockSign.POSITIVE))

    def order(b: Block):
        first = min((e.crossing for e in b.edges), default=len(g.edges))
        return first, min(b.vertices)

    return sorted(blocks, key=order)


def analyze(g: SignedGraph) -> GraphAnalysis:
    blocks = tuple(block_decomposition(g))
    analysis = GraphAnalysis(
        blocks=blocks,
        vertex_count=len(g.vertices),
        edge_count=len(g.edges),
        component_count=nx.number_connected_components(g.simple()) if g.vertices else 0,
        edge_signs=tuple(e.sign for e in g.edges),
    )
    logger.debug(
        f"Seifert graph: V={analysis.vertex_count} E={analysis.edge_count} "
        f"blocks={len(blocks)} rank={analysis.rank}"
    )
    return analysis


def positive_components(g: SignedGraph) -> int:
    """Connected components once the negative edges are deleted."""
    return nx.number_connected_components(g.without_negative_edges().simple())
