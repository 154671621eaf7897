# src/homfly/__init__.py
"""
HOMFLY polynomial: exact Laurent polynomials and the skein engine.

Public API:
    homfly(d, cap=None, use_cache=True) -> LaurentPoly2
    SkeinEngine(cap, use_cache).homfly(d, basepoints=None)
    skein_tree(d, cap=None) -> SkeinTree   (.total(), .to_dot(), .to_json())
    contributions(tree), leaf_observations(tree, analysis)

Polynomials:
    LaurentPoly2 / LaurentPoly1, DELTA
    add, mul, mono_mul, delta_power
    min_deg_v, max_deg_v, max_deg_z, highest_z_term, coefficient
    mirror_poly, split_union_poly, conway, unit_check, parity_ok
"""
from src.homfly.engine import (
    SkeinEngine,
    default_basepoints,
    first_descending_crossing,
    homfly,
)
from src.homfly.polynomial import (
    DELTA,
    LaurentPoly1,
    LaurentPoly2,
    add,
    coefficient,
    conway,
    delta_power,
    highest_z_term,
    max_deg_v,
    max_deg_z,
    min_deg_v,
    mirror_poly,
    mono_mul,
    mul,
    parity_ok,
    split_union_poly,
    unit_check,
)
from src.homfly.tree import (
    Monomial,
    SkeinNode,
    SkeinTree,
    contributions,
    leaf_observations,
    skein_tree,
)

__all__ = [
    "DELTA",
    "LaurentPoly1",
    "LaurentPoly2",
    "Monomial",
    "SkeinEngine",
    "SkeinNode",
    "SkeinTree",
    "add",
    "coefficient",
    "contributions",
    "conway",
    "default_basepoints",
    "delta_power",
    "first_descending_crossing",
    "highest_z_term",
    "homfly",
    "leaf_observations",
    "max_deg_v",
    "max_deg_z",
    "min_deg_v",
    "mirror_poly",
    "mono_mul",
    "mul",
    "parity_ok",
    "skein_tree",
    "split_union_poly",
    "unit_check",
]
