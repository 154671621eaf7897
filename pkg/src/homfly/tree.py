# src/homfly/tree.py
"""
Explicit skein resolution trees.

Each node holds a diagram; each edge is labelled by the monomial the engine
multiplies the child's polynomial by (v^2 or v z under a positive crossing,
v^-2 or -v^-1 z under a negative one). A leaf is an ascending diagram, and

    P(D) = sum over leaves n of pi(n) * Delta^(#n - 1)

where pi(n) is the product of the labels on the path to n and #n the number
of components of the leaf.
"""
import json
import logging
from dataclasses import dataclass, field
from itertools import count
from pathlib import Path
from typing import Iterator, Optional

from graphviz import Digraph

from src.diagram import LinkDiagram, Resolution, resolve
from src.homfly.engine import EDGE_LABELS, SkeinEngine, default_basepoints, first_descending_crossing
from src.homfly.polynomial import LaurentPoly2, delta_power

logger = logging.getLogger("homfly_bounds.engine")


@dataclass(frozen=True)
class Monomial:
    a: int = 0
    b: int = 0
    coeff: int = 1

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.a + other.a, self.b + other.b, self.coeff * other.coeff)

    def to_poly(self) -> LaurentPoly2:
        return LaurentPoly2.monomial(self.a, self.b, self.coeff)

    def __str__(self) -> str:
        return self.to_poly().to_text()


@dataclass
class SkeinNode:
    diagram: LinkDiagram
    pi: Monomial = field(default_factory=Monomial)
    label: Optional[Monomial] = None
    kind: str = "root"
    crossing: Optional[int] = None
    children: list["SkeinNode"] = field(default_factory=list)

    @property
    def is_leaf(self) -> bool:
        return not self.children

    @property
    def leaf_component_count(self) -> Optional[int]:
        return self.diagram.component_count if self.is_leaf else None

    def contribution(self) -> LaurentPoly2:
        """pi(n) * Delta^(#n - 1) for a leaf."""
        return self.pi.to_poly() * delta_power(self.diagram.component_count - 1)


@dataclass
class SkeinTree:
    root: SkeinNode

    def nodes(self) -> Iterator[SkeinNode]:
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def leaves(self) -> list[SkeinNode]:
        return [n for n in self.nodes() if n.is_leaf]

    def rightmost_leaf(self) -> SkeinNode:
        node = self.root
        while node.children:
            node = node.children[-1]
        return node

    def total(self) -> LaurentPoly2:
        result = LaurentPoly2.zero()
        for leaf in self.leaves():
            result = result + leaf.contribution()
        return result

    def to_dict(self) -> dict:
        def encode(node: SkeinNode) -> dict:
            out = {
                "crossings": node.diagram.crossing_count,
                "pd": node.diagram.to_pd(),
                "pi": str(node.pi),
                "kind": node.kind,
            }
            if node.label is not None:
                out["label"] = str(node.label)
            if node.is_leaf:
                out["components"] = node.leaf_component_count
            else:
                out["resolved_crossing"] = node.crossing
                out["children"] = [encode(c) for c in node.children]
            return out

        return encode(self.root)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def to_dot(self, name: Optional[str] = None) -> Digraph:
        dot = Digraph(name=name or "skein_tree", graph_attr={"rankdir": "TB"})
        ids = count()

        def draw(node: SkeinNode) -> str:
            node_id = f"n{next(ids)}"
            title = node.diagram.name or "D"
            label = f"{title}\nc={node.diagram.crossing_count}\npi={node.pi}"
            if node.is_leaf:
                label += f"\n#n={node.leaf_component_count}"
            dot.node(node_id, label=label, shape="box" if node.is_leaf else "ellipse")
            for child in node.children:
                child_id = draw(child)
                dot.edge(node_id, child_id, label=_edge_text(child.label))
            return node_id

        draw(self.root)
        return dot

    def save_dot(self, path: str | Path) -> Path:
        path = Path(path)
        path.write_text(self.to_dot(name=path.stem).source)
        logger.info(f"Wrote skein tree with {len(self.leaves())} leaves to {path}")
        return path


_EDGE_TEXT = {(2, 0, 1): "v^2", (1, 1, 1): "vz", (-2, 0, 1): "v^-2", (-1, 1, -1): "-v^-1 z"}


def _edge_text(label: Optional[Monomial]) -> str:
    if label is None:
        return ""
    return _EDGE_TEXT.get((label.a, label.b, label.coeff), str(label))


def skein_tree(d: LinkDiagram, cap: Optional[int] = None) -> SkeinTree:
    """Full resolution tree the engine walks for `d` (no memoization)."""
    SkeinEngine(cap=cap).check_cap(d)

    def grow(node: SkeinNode, basepoints: Optional[tuple[int, ...]]) -> None:
        points = basepoints if basepoints is not None else default_basepoints(node.diagram)
        i = first_descending_crossing(node.diagram, points)
        if i is None:
            return
        node.crossing = i
        switch_label, smooth_label = (Monomial(*t) for t in EDGE_LABELS[node.diagram.crossings[i].sign])
        switched = SkeinNode(
            resolve(node.diagram, i, Resolution.SWITCH), node.pi * switch_label, switch_label, "switch"
        )
        smoothed = SkeinNode(
            resolve(node.diagram, i, Resolution.SMOOTH), node.pi * smooth_label, smooth_label, "smooth"
        )
        node.children = [switched, smoothed]
        grow(switched, points)
        grow(smoothed, None)

    root = SkeinNode(d)
    grow(root, None)
    return SkeinTree(root)


def contributions(tree: SkeinTree) -> list[tuple[Monomial, int]]:
    """(pi(n), #n) for every leaf, left to right."""
    return [(leaf.pi, leaf.diagram.component_count) for leaf in tree.leaves()]


def leaf_observations(tree: SkeinTree, analysis) -> dict:
    """
    Structure of the top-z leaves of a tree.

    Reports whether every leaf reaching the top z-degree is a knot, whether
    those leaves share one sign (and whether it is the product of
    epsilon(B)^rank(B) over the blocks), and whether the rightmost leaf is
    exactly v^(sum epsilon*rank) z^rank. These are observations; nothing here
    is required for the polynomial to be correct.
    """
    leaves = tree.leaves()
    top = max(leaf.pi.b - (leaf.diagram.component_count - 1) for leaf in leaves)
    top_leaves = [leaf for leaf in leaves if leaf.pi.b - (leaf.diagram.component_count - 1) == top]
    signs = {1 if leaf.pi.coeff > 0 else -1 for leaf in top_leaves}
    rightmost = tree.rightmost_leaf()

    expected_sign = None
    rightmost_matches = None
    if analysis.is_homogeneous:
        negative_rank = sum(b.rank for b in analysis.blocks if b.sign.epsilon == -1)
        expected_sign = -1 if negative_rank % 2 else 1
        rightmost_matches = (
            rightmost.diagram.component_count == 1
            and rightmost.pi == Monomial(analysis.eps_rank_sum, analysis.rank, 1)
        )
    return {
        "top_z_degree": top,
        "top_leaves": len(top_leaves),
        "top_leaves_are_knots": all(leaf.diagram.component_count == 1 for leaf in top_leaves),
        "uniform_sign": len(signs) == 1,
        "sign": signs.pop() if len(signs) == 1 else None,
        "expected_sign": expected_sign,
        "rightmost_leaf": str(rightmost.pi),
        "rightmost_matches": rightmost_matches,
    }
