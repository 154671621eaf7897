# src/diagram/model.py
"""
Oriented link diagrams in PD form.

A crossing is a 4-tuple of arc labels X(a, b, c, d): slot 0 is the incoming
under-strand, the remaining slots follow in cyclic order, so the under-strand
leaves through slot 2 and the over-strand uses slots 1 and 3. The crossing is
positive when the over-strand runs from slot 1 to slot 3 and negative when it
runs from slot 3 to slot 1.

Zero-crossing components (split unknots) carry no arcs; a diagram just counts
them in `unknots`.
"""
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property

from src.errors import InconsistentDiagram

UNDER_IN = 0
UNDER_OUT = 2

# incoming slot -> outgoing slot under the orientation-preserving smoothing
_SMOOTHING = {
    1: {UNDER_IN: 3, 1: UNDER_OUT},
    -1: {UNDER_IN: 1, 3: UNDER_OUT},
}


@dataclass(frozen=True)
class Crossing:
    arcs: tuple[int, int, int, int]
    sign: int

    def __post_init__(self):
        if len(self.arcs) != 4:
            raise InconsistentDiagram(f"crossing {self.arcs} must have 4 arcs")
        if self.sign not in (1, -1):
            raise InconsistentDiagram(f"crossing {self.arcs} has sign {self.sign}")

    @property
    def over_in(self) -> int:
        return 1 if self.sign > 0 else 3

    @property
    def over_out(self) -> int:
        return 3 if self.sign > 0 else 1

    def is_incoming(self, slot: int) -> bool:
        return slot == UNDER_IN or slot == self.over_in

    def smoothing_exit(self, slot: int) -> int:
        """Outgoing slot joined to incoming `slot` by the oriented smoothing."""
        return _SMOOTHING[self.sign][slot]

    def switched(self) -> "Crossing":
        """Same strands, over and under exchanged; the sign flips."""
        a, b, c, d = self.arcs
        if self.sign > 0:
            return Crossing((b, c, d, a), -1)
        return Crossing((d, a, b, c), 1)

    def relabeled(self, mapping: dict[int, int]) -> "Crossing":
        return Crossing(tuple(mapping.get(x, x) for x in self.arcs), self.sign)

    def to_pd(self) -> str:
        return "X({},{},{},{})".format(*self.arcs)


@dataclass(frozen=True)
class LinkDiagram:
    """
    Immutable oriented link diagram.

    Invariants (checked on construction): every arc label occurs in exactly
    two crossing slots, once as an incoming end and once as an outgoing end.
    That is the closed-curve condition together with a consistent orientation.
    """
    crossings: tuple[Crossing, ...] = ()
    unknots: int = 0
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.unknots < 0:
            raise InconsistentDiagram(f"negative unknot count {self.unknots}")
        counts = Counter(a for x in self.crossings for a in x.arcs)
        for arc, n in counts.items():
            if n != 2:
                raise InconsistentDiagram(f"arc {arc} is used {n} times (expected 2)")
        heads: dict[int, tuple[int, int]] = {}
        tails: dict[int, tuple[int, int]] = {}
        for ci, x in enumerate(self.crossings):
            for slot, arc in enumerate(x.arcs):
                ends = heads if x.is_incoming(slot) else tails
                if arc in ends:
                    kind = "enters" if ends is heads else "leaves"
                    raise InconsistentDiagram(
                        f"arc {arc} {kind} two crossings; orientation broken at {x.to_pd()}"
                    )
                ends[arc] = (ci, slot)
        object.__setattr__(self, "_heads", heads)
        object.__setattr__(self, "_tails", tails)

    # ── structure ────────────────────────────────────────────────────────────

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def arcs(self) -> frozenset[int]:
        return frozenset(self._heads)

    def head(self, arc: int) -> tuple[int, int]:
        """(crossing index, slot) where `arc` ends."""
        return self._heads[arc]

    def tail(self, arc: int) -> tuple[int, int]:
        """(crossing index, slot) where `arc` starts."""
        return self._tails[arc]

    def next_arc(self, arc: int) -> int:
        """The arc following `arc` along its component."""
        ci, slot = self._heads[arc]
        return self.crossings[ci].arcs[(slot + 2) % 4]

    def walk(self, start: int) -> list[int]:
        """Arcs of the component through `start`, in orientation order from `start`."""
        path = [start]
        arc = self.next_arc(start)
        while arc != start:
            path.append(arc)
            arc = self.next_arc(arc)
        return path

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Arc cycles of the components that have crossings, ordered by smallest arc."""
        seen: set[int] = set()
        cycles = []
        for arc in sorted(self._heads):
            if arc in seen:
                continue
            cycle = self.walk(arc)
            seen.update(cycle)
            cycles.append(tuple(cycle))
        return tuple(cycles)

    @property
    def component_count(self) -> int:
        """#L: number of link components, split unknots included."""
        return len(self.components) + self.unknots

    @property
    def max_arc(self) -> int:
        return max(self._heads, default=0)

    def signs(self) -> tuple[int, ...]:
        return tuple(x.sign for x in self.crossings)

    def to_pd(self) -> str:
        tokens = [x.to_pd() for x in self.crossings]
        if self.unknots:
            tokens.append(f"U({self.unknots})")
        return ",".join(tokens)

    def renamed(self, name: str | None) -> "LinkDiagram":
        return LinkDiagram(self.crossings, self.unknots, name)

    def __str__(self) -> str:
        label = self.name or "diagram"
        return f"{label} [{self.to_pd() or 'empty'}]"


@dataclass(frozen=True)
class SeifertCircleSet:
    circles: tuple[frozenset[int], ...]
    free: int = 0

    @property
    def count(self) -> int:
        return len(self.circles) + self.free

    def index_of(self) -> dict[int, int]:
        """arc -> index of the circle containing it."""
        return {arc: i for i, circle in enumerate(self.circles) for arc in circle}


@dataclass(frozen=True)
class DiagramStats:
    s: int
    c: int
    w: int
    s_plus: int
    diagram_components: int
    self_linking: int

    def to_dict(self) -> dict:
        return {
            "s": self.s,
            "c": self.c,
            "w": self.w,
            "s_plus": self.s_plus,
            "diagram_components": self.diagram_components,
            "self_linking": self.self_linking,
        }
