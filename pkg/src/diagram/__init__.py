# src/diagram/__init__.py
"""
Oriented link diagrams.

Public API:
    parse_pd(text, name=None) -> LinkDiagram
    parse_braid(text, name=None) / from_braid(word, strands=None) -> LinkDiagram
    from_tuples(tuples, unknots=0) -> LinkDiagram
    to_json(d) / from_json(payload)
    writhe(d), seifert_circles(d), s_plus(d), stats(d) -> DiagramStats
    resolve(d, i, Resolution.SWITCH | Resolution.SMOOTH) -> LinkDiagram
    mirror(d), split_components(d), connected_count(d), disjoint_union(d1, d2)
    is_alternating(d), is_reduced(d), nugatory_crossings(d), is_positive_diagram(d)
    canonical_code(d) -> hashable memo key
"""
from src.diagram.model import Crossing, DiagramStats, LinkDiagram, SeifertCircleSet
from src.diagram.operations import (
    Resolution,
    canonical_code,
    connected_count,
    disjoint_union,
    is_alternating,
    is_positive_diagram,
    is_reduced,
    mirror,
    nugatory_crossings,
    projection_graph,
    resolve,
    s_plus,
    seifert_circles,
    split_components,
    stats,
    writhe,
)
from src.diagram.pd import (
    canonical_relabel,
    from_braid,
    from_json,
    from_tuples,
    parse_braid,
    parse_pd,
    to_json,
)

__all__ = [
    "Crossing",
    "DiagramStats",
    "LinkDiagram",
    "Resolution",
    "SeifertCircleSet",
    "canonical_code",
    "canonical_relabel",
    "connected_count",
    "disjoint_union",
    "from_braid",
    "from_json",
    "from_tuples",
    "is_alternating",
    "is_positive_diagram",
    "is_reduced",
    "mirror",
    "nugatory_crossings",
    "parse_braid",
    "parse_pd",
    "projection_graph",
    "resolve",
    "s_plus",
    "seifert_circles",
    "split_components",
    "stats",
    "to_json",
    "writhe",
]
