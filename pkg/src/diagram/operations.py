# src/diagram/operations.py
"""
Pure operations on LinkDiagram: writhe, Seifert circles, resolutions,
mirror image, split pieces, classification predicates and the canonical code
used as a memo key by the skein engine.
"""
import logging
from enum import Enum

import networkx as nx
from networkx.utils import UnionFind

from src.diagram.model import (
    UNDER_IN,
    UNDER_OUT,
    DiagramStats,
    LinkDiagram,
    SeifertCircleSet,
)
from src.errors import IndexOutOfRange

logger = logging.getLogger("homfly_bounds.diagram")


class Resolution(str, Enum):
    SWITCH = "switch"
    SMOOTH = "smooth"


# ── per-diagram quantities ───────────────────────────────────────────────────

def writhe(d: LinkDiagram) -> int:
    return sum(x.sign for x in d.crossings)


def seifert_circles(d: LinkDiagram) -> SeifertCircleSet:
    """Circles left by the oriented smoothing of every crossing, as arc sets."""
    successor = {}
    for arc in d.arcs:
        ci, slot = d.head(arc)
        x = d.crossings[ci]
        successor[arc] = x.arcs[x.smoothing_exit(slot)]

    seen: set[int] = set()
    circles = []
    for arc in sorted(successor):
        if arc in seen:
            continue
        circle = {arc}
        nxt = successor[arc]
        while nxt != arc:
            circle.add(nxt)
            nxt = successor[nxt]
        seen |= circle
        circles.append(frozenset(circle))
    return SeifertCircleSet(tuple(circles), d.unknots)


def s_plus(d: LinkDiagram) -> int:
    """Connected components after smoothing every negative crossing."""
    result = d
    # descending order keeps the remaining indices valid
    for i in reversed(range(d.crossing_count)):
        if d.crossings[i].sign < 0:
            result = resolve(result, i, Resolution.SMOOTH)
    return connected_count(result)


def stats(d: LinkDiagram) -> DiagramStats:
    s = seifert_circles(d).count
    w = writhe(d)
    return DiagramStats(
        s=s,
        c=d.crossing_count,
        w=w,
        s_plus=s_plus(d),
        diagram_components=connected_count(d),
        self_linking=w - s,
    )


# ── resolutions ──────────────────────────────────────────────────────────────

def resolve(d: LinkDiagram, i: int, mode: Resolution | str) -> LinkDiagram:
    """
    The other two members of the skein triple at crossing `i`.

    SWITCH exchanges over and under at the crossing (arcs keep their labels).
    SMOOTH removes it by the oriented resolution, merging the arcs it joins;
    a merged strand that no longer meets any crossing becomes a free unknot.
    """
    if not 0 <= i < d.crossing_count:
        raise IndexOutOfRange(f"crossing index {i} out of range for {d.crossing_count} crossings")
    mode = Resolution(mode)
    x = d.crossings[i]

    if mode is Resolution.SWITCH:
        crossings = d.crossings[:i] + (x.switched(),) + d.crossings[i + 1:]
        return LinkDiagram(crossings, d.unknots)

    uf = UnionFind(x.arcs)
    for slot in (UNDER_IN, x.over_in):
        uf.union(x.arcs[slot], x.arcs[x.smoothing_exit(slot)])
    mapping = {}
    for group in uf.to_sets():
        rep = min(group)
        mapping.update((a, rep) for a in group)

    rest = tuple(c.relabeled(mapping) for j, c in enumerate(d.crossings) if j != i)
    used = {a for c in rest for a in c.arcs}
    freed = len({mapping[a] for a in x.arcs} - used)
    return LinkDiagram(rest, d.unknots + freed)


def mirror(d: LinkDiagram) -> LinkDiagram:
    name = f"{d.name}*" if d.name else None
    return LinkDiagram(tuple(x.switched() for x in d.crossings), d.unknots, name)


# ── split structure ──────────────────────────────────────────────────────────

def _crossing_groups(d: LinkDiagram) -> list[list[int]]:
    uf = UnionFind(range(d.crossing_count))
    owner: dict[int, int] = {}
    for ci, x in enumerate(d.crossings):
        for arc in x.arcs:
            if arc in owner:
                uf.union(owner[arc], ci)
            else:
                owner[arc] = ci
    groups = [sorted(g) for g in uf.to_sets()]
    groups.sort(key=lambda g: min(a for ci in g for a in d.crossings[ci].arcs))
    return groups


def split_components(d: LinkDiagram) -> list[LinkDiagram]:
    """
    Connected pieces of the diagram, ordered by smallest arc label, followed by
    one zero-crossing unknot per free component.
    """
    pieces = []
    for k, group in enumerate(_crossing_groups(d)):
        name = f"{d.name}#{k + 1}" if d.name else None
        pieces.append(LinkDiagram(tuple(d.crossings[ci] for ci in group), 0, name))
    pieces.extend(LinkDiagram((), 1, "0_1") for _ in range(d.unknots))
    return pieces


def connected_count(d: LinkDiagram) -> int:
    return len(_crossing_groups(d)) + d.unknots


def disjoint_union(first: LinkDiagram, second: LinkDiagram, name: str | None = None) -> LinkDiagram:
    """Distant union; the second diagram's arcs are shifted past the first's."""
    shift = first.max_arc
    moved = tuple(x.relabeled({a: a + shift for a in x.arcs}) for x in second.crossings)
    return LinkDiagram(first.crossings + moved, first.unknots + second.unknots, name)


# ── classification ───────────────────────────────────────────────────────────

def is_positive_diagram(d: LinkDiagram) -> bool:
    return all(x.sign > 0 for x in d.crossings)


def is_alternating(d: LinkDiagram) -> bool:
    """Along every arc, an under-passage is followed by an over-passage and vice versa."""
    for arc in d.arcs:
        left_under = d.tail(arc)[1] == UNDER_OUT
        enters_under = d.head(arc)[1] == UNDER_IN
        if left_under == enters_under:
            return False
    return True


def projection_graph(d: LinkDiagram) -> nx.Graph:
    """Crossings and arcs as a bipartite graph (the 4-valent projection, subdivided)."""
    g = nx.Graph()
    for ci, x in enumerate(d.crossings):
        g.add_node(("x", ci))
        for arc in x.arcs:
            g.add_edge(("x", ci), ("a", arc))
    return g


def nugatory_crossings(d: LinkDiagram) -> list[int]:
    """Indices of crossings that are cut vertices of the projection graph."""
    cut = nx.articulation_points(projection_graph(d))
    return sorted(node[1] for node in cut if node[0] == "x")


def is_reduced(d: LinkDiagram) -> bool:
    return not nugatory_crossings(d)


# ── canonical form ───────────────────────────────────────────────────────────

def _labelling_from(piece: LinkDiagram, start: int) -> dict[int, int]:
    mapping: dict[int, int] = {}
    pending = [start]
    while pending:
        for arc in piece.walk(pending.pop()):
            mapping[arc] = len(mapping) + 1
        # next component: first unlabelled arc met at the crossings reached so far
        for arc in sorted(mapping, key=mapping.get):
            x = piece.crossings[piece.head(arc)[0]]
            fresh = next((a for a in x.arcs if a not in mapping), None)
            if fresh is not None:
                pending.append(fresh)
                break
    return mapping


def _piece_code(piece: LinkDiagram) -> tuple:
    best = None
    for start in piece.arcs:
        mapping = _labelling_from(piece, start)
        code = tuple(sorted(
            (tuple(mapping[a] for a in x.arcs), x.sign) for x in piece.crossings
        ))
        if best is None or code < best:
            best = code
    return best


def canonical_code(d: LinkDiagram) -> tuple:
    """
    Relabelling-invariant key: the minimal traversal relabelling of every
    connected piece, plus the free unknot count.
    """
    pieces = split_components(LinkDiagram(d.crossings))
    return tuple(sorted(_piece_code(p) for p in pieces)), d.unknots
