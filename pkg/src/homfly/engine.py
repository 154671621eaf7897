# src/homfly/engine.py
"""
Skein-tree HOMFLY engine.

Fix one basepoint per component and an order on the components. Walking the
components in that order from their basepoints, a diagram is ascending when
every crossing is first reached along its under-strand; such a diagram is an
unlink and contributes Delta^(#components - 1). Otherwise the first crossing
first reached along its over-strand is resolved with

    P+ = v^2 P- + v z P0        P- = v^-2 P+ - v^-1 z P0

The switched child keeps the parent's basepoints, so its count of offending
crossings drops by one; the smoothed child has one crossing fewer and picks
fresh basepoints. Results are memoized on canonical diagram codes.
"""
import logging
import threading
from typing import Optional, Sequence

from src.config import get_settings
from src.diagram import LinkDiagram, Resolution, canonical_code, resolve
from src.diagram.model import UNDER_IN
from src.errors import CrossingCapExceeded, InconsistentDiagram
from src.homfly.polynomial import LaurentPoly2, delta_power
from src.memory import cache_data, get_cached_data

logger = logging.getLogger("homfly_bounds.engine")

# (v-exponent, z-exponent, coefficient) for the switched and smoothed children
EDGE_LABELS = {
    1: ((2, 0, 1), (1, 1, 1)),
    -1: ((-2, 0, 1), (-1, 1, -1)),
}


def default_basepoints(d: LinkDiagram) -> tuple[int, ...]:
    """Per component, the smallest arc ending in an under-crossing (else its smallest arc)."""
    points = []
    for component in d.components:
        under = [a for a in component if d.head(a)[1] == UNDER_IN]
        points.append(min(under) if under else min(component))
    return tuple(points)


def _check_basepoints(d: LinkDiagram, basepoints: Sequence[int]) -> None:
    owner = {a: k for k, comp in enumerate(d.components) for a in comp}
    try:
        hit = sorted(owner[a] for a in basepoints)
    except KeyError as e:
        raise ValueError(f"basepoint {e.args[0]} is not an arc of the diagram") from None
    if hit != list(range(len(d.components))):
        raise ValueError("need exactly one basepoint on every component with crossings")


def first_descending_crossing(d: LinkDiagram, basepoints: Sequence[int]) -> Optional[int]:
    """Index of the first crossing first reached on its over-strand, None if ascending."""
    seen: set[int] = set()
    for start in basepoints:
        for arc in d.walk(start):
            ci, slot = d.head(arc)
            if ci in seen:
                continue
            seen.add(ci)
            if slot != UNDER_IN:
                return ci
    return None


class SkeinEngine:
    """
    HOMFLY polynomial by ascending-diagram skein recursion.

    Args:
        cap: Crossing cap (defaults to HOMFLY_CROSSING_CAP)
        use_cache: Consult and fill the shared memo cache
    """

    def __init__(self, cap: Optional[int] = None, use_cache: bool = True):
        self.cap = cap if cap is not None else get_settings().crossing_cap
        self.use_cache = use_cache
        self._lock = threading.Lock()
        self._counters = {"nodes": 0, "leaves": 0, "cache_hits": 0}

    @property
    def stats(self) -> dict:
        with self._lock:
            return dict(self._counters)

    def _count(self, key: str) -> None:
        with self._lock:
            self._counters[key] += 1

    def check_cap(self, d: LinkDiagram) -> None:
        if d.crossing_count > self.cap:
            raise CrossingCapExceeded(d.crossing_count, self.cap)

    def homfly(self, d: LinkDiagram, basepoints: Optional[Sequence[int]] = None) -> LaurentPoly2:
        self.check_cap(d)
        if d.component_count == 0:
            raise InconsistentDiagram("empty diagram has no HOMFLY polynomial")
        if basepoints is not None:
            _check_basepoints(d, basepoints)
        result = self._compute(d, tuple(basepoints) if basepoints is not None else None)
        logger.debug(f"HOMFLY of {d.name or 'diagram'}: {result}")
        return result

    def _compute(self, d: LinkDiagram, basepoints: Optional[tuple[int, ...]]) -> LaurentPoly2:
        key = ("homfly", canonical_code(d)) if self.use_cache else None
        if key is not None:
            cached = get_cached_data(key)
            if cached is not None:
                self._count("cache_hits")
                return cached

        self._count("nodes")
        points = basepoints if basepoints is not None else default_basepoints(d)
        i = first_descending_crossing(d, points)
        if i is None:
            self._count("leaves")
            result = delta_power(d.component_count - 1)
        else:
            switch_label, smooth_label = EDGE_LABELS[d.crossings[i].sign]
            switched = self._compute(resolve(d, i, Resolution.SWITCH), points)
            smoothed = self._compute(resolve(d, i, Resolution.SMOOTH), None)
            result = switched.shift(*switch_label) + smoothed.shift(*smooth_label)

        if key is not None:
            cache_data(key, result)
        return result


def homfly(d: LinkDiagram, cap: Optional[int] = None, use_cache: bool = True) -> LaurentPoly2:
    """HOMFLY polynomial of `d` with a fresh engine."""
    return SkeinEngine(cap=cap, use_cache=use_cache).homfly(d)
