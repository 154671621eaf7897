# src/diagram/pd.py
"""
PD-code, braid-word and JSON front ends for LinkDiagram.

PD text: comma-separated crossing tokens "X(a,b,c,d)" (square brackets and a
surrounding "PD[...]" are accepted too) plus optional "U(k)" tokens adding k
zero-crossing unknot components.

Orientation is recovered from the code itself: every crossing's slot 0 is an
incoming under-strand, which orients each component that passes under
something. A component that only ever passes over is oriented along its arc
numbering.
"""
import json
import logging
import re
from typing import Iterable, Sequence

from src.diagram.model import UNDER_IN, UNDER_OUT, Crossing, LinkDiagram
from src.errors import InconsistentDiagram, MalformedSyntax

logger = logging.getLogger("homfly_bounds.diagram")

_TOKEN = re.compile(r"([A-Za-z]+)\s*[\(\[]([^\)\]]*)[\)\]]")
_WRAPPER = re.compile(r"^\s*(?:PD\s*)?[\(\[](.*)[\)\]]\s*$", re.DOTALL)


def parse_pd(text: str, name: str | None = None) -> LinkDiagram:
    """Parse PD text into a validated, canonically relabelled diagram."""
    if text is None or not text.strip():
        raise MalformedSyntax("empty PD code")
    body = text.strip()
    wrapped = _WRAPPER.match(body)
    if wrapped and not _TOKEN.fullmatch(body):
        body = wrapped.group(1)

    tuples: list[tuple[int, int, int, int]] = []
    unknots = 0
    pos = 0
    for match in _TOKEN.finditer(body):
        gap = body[pos:match.start()]
        if gap.strip(" ,\t\n"):
            raise MalformedSyntax(f"unexpected text {gap.strip()!r} in PD code")
        pos = match.end()
        kind, raw = match.group(1).upper(), match.group(2)
        token = match.group(0)
        try:
            values = [int(v) for v in raw.split(",")] if raw.strip() else []
        except ValueError:
            raise MalformedSyntax(f"non-integer entry in token {token!r}") from None
        if kind == "X":
            if len(values) != 4:
                raise MalformedSyntax(f"crossing token {token!r} needs 4 arcs, got {len(values)}")
            if any(v <= 0 for v in values):
                raise MalformedSyntax(f"crossing token {token!r} has a non-positive arc label")
            tuples.append(tuple(values))
        elif kind == "U":
            if len(values) != 1 or values[0] < 1:
                raise MalformedSyntax(f"unknot token {token!r} needs one positive count")
            unknots += values[0]
        else:
            raise MalformedSyntax(f"unknown token {token!r}")
    tail = body[pos:]
    if tail.strip(" ,\t\n"):
        raise MalformedSyntax(f"unexpected text {tail.strip()!r} in PD code")
    if not tuples and not unknots:
        raise MalformedSyntax(f"no crossing or unknot tokens in {text!r}")

    diagram = from_tuples(tuples, unknots=unknots, name=name)
    logger.debug(f"Parsed {diagram.name or 'diagram'}: {diagram.crossing_count} crossings")
    return diagram


def from_tuples(
    tuples: Sequence[Sequence[int]],
    unknots: int = 0,
    name: str | None = None,
    signs: Sequence[int] | None = None,
) -> LinkDiagram:
    """
    Build a diagram from raw PD tuples.

    Crossing signs are inferred from orientation unless `signs` is given.
    """
    tuples = [tuple(t) for t in tuples]
    if signs is not None:
        crossings = tuple(Crossing(t, s) for t, s in zip(tuples, signs, strict=True))
        return canonical_relabel(LinkDiagram(crossings, unknots, name))
    occurrences: dict[int, list[tuple[int, int]]] = {}
    for ci, t in enumerate(tuples):
        for slot, arc in enumerate(t):
            occurrences.setdefault(arc, []).append((ci, slot))
    for arc, occ in sorted(occurrences.items()):
        if len(occ) != 2:
            raise InconsistentDiagram(f"arc {arc} is used {len(occ)} times (expected 2)")

    def other_end(ci: int, slot: int) -> tuple[int, int]:
        first, second = occurrences[tuples[ci][slot]]
        return second if first == (ci, slot) else first

    over_in: dict[int, int] = {}
    visited: set[tuple[int, int]] = set()
    for start in sorted((ci, s) for ci in range(len(tuples)) for s in range(4)):
        if start in visited:
            continue
        # passages (crossing, entry slot, exit slot) along one strand cycle
        passages = []
        entry = start
        while True:
            ci, slot = entry
            exit_ = (ci, (slot + 2) % 4)
            visited.update((entry, exit_))
            passages.append((ci, slot, exit_[1]))
            entry = other_end(*exit_)
            if entry == start:
                break

        under_entries = {slot for _, slot, _ in passages if slot in (UNDER_IN, UNDER_OUT)}
        if under_entries == {UNDER_IN, UNDER_OUT}:
            bad = next(ci for ci, slot, _ in passages if slot == UNDER_OUT)
            raise InconsistentDiagram(
                f"under-strand orientation broken at X{tuples[bad]}: "
                "a component runs against an incoming under slot"
            )
        if under_entries == {UNDER_OUT}:
            reverse = True
        elif under_entries == {UNDER_IN}:
            reverse = False
        else:
            reverse = _prefers_reverse([tuples[ci][s] for ci, s, _ in passages])
        for ci, entry_slot, exit_slot in passages:
            slot = exit_slot if reverse else entry_slot
            if slot in (1, 3):
                over_in[ci] = slot

    crossings = tuple(
        Crossing(t, 1 if over_in[ci] == 1 else -1) for ci, t in enumerate(tuples)
    )
    return canonical_relabel(LinkDiagram(crossings, unknots, name))


def _prefers_reverse(entry_arcs: list[int]) -> bool:
    """
    Orient an over-only component along increasing arc labels.

    `entry_arcs` lists the arcs in the order of the first traversal. When both
    directions read the same (a component of one or two arcs) the walk keeps
    its first direction, which enters the lowest-indexed crossing it meets
    through slot 1; that crossing comes out positive.
    """
    n = len(entry_arcs)
    i = entry_arcs.index(min(entry_arcs))
    forward = [entry_arcs[(i + k) % n] for k in range(n)]
    # traversing backwards visits the arcs leaving each crossing in reverse order
    backward = [entry_arcs[(i - k) % n] for k in range(n)]
    return backward[1:] < forward[1:] if n > 1 else False


def canonical_relabel(diagram: LinkDiagram) -> LinkDiagram:
    """
    Relabel arcs 1..2c in traversal order.

    Components are taken in order of their smallest original label and each is
    walked from that label, so a code already numbered along its components is
    left unchanged.
    """
    mapping: dict[int, int] = {}
    for component in diagram.components:
        for arc in component:
            mapping[arc] = len(mapping) + 1
    if all(k == v for k, v in mapping.items()):
        return diagram
    crossings = tuple(x.relabeled(mapping) for x in diagram.crossings)
    return LinkDiagram(crossings, diagram.unknots, diagram.name)


def from_braid(word: Iterable[int], strands: int | None = None, name: str | None = None) -> LinkDiagram:
    """
    Closure of a braid word.

    Generator i > 0 is a positive crossing between strands i and i+1, -i its
    inverse. Strands no generator touches close up into split unknots.
    """
    word = [int(g) for g in word]
    if any(g == 0 for g in word):
        raise MalformedSyntax("braid generators must be non-zero")
    width = max((abs(g) for g in word), default=0) + 1
    strands = strands if strands is not None else width
    if strands < width:
        raise MalformedSyntax(f"braid needs at least {width} strands, got {strands}")
    if strands < 1:
        raise MalformedSyntax("braid needs at least one strand")

    next_label = strands + 1
    bottom = list(range(1, strands + 1))
    current = list(bottom)
    tuples: list[list[int]] = []
    for g in word:
        i = abs(g) - 1
        left, right = current[i], current[i + 1]
        new_left, new_right = next_label, next_label + 1
        next_label += 2
        if g > 0:
            # over-strand: left in -> right out (slot 1 -> slot 3)
            tuples.append([right, left, new_left, new_right])
        else:
            # over-strand: right in -> left out (slot 3 -> slot 1)
            tuples.append([left, new_left, new_right, right])
        current[i], current[i + 1] = new_left, new_right

    closing = {top: base for top, base in zip(current, bottom) if top != base}
    free = sum(1 for top, base in zip(current, bottom) if top == base)
    tuples = [[closing.get(a, a) for a in t] for t in tuples]
    signs = [1 if g > 0 else -1 for g in word]
    return from_tuples(tuples, unknots=free, name=name, signs=signs)


def parse_braid(text: str, name: str | None = None) -> LinkDiagram:
    """Parse a braid word written as integers separated by spaces or commas."""
    raw = [tok for tok in re.split(r"[\s,]+", text.strip().strip("[]()")) if tok]
    try:
        word = [int(tok) for tok in raw]
    except ValueError:
        raise MalformedSyntax(f"braid word {text!r} is not a list of integers") from None
    if not word:
        raise MalformedSyntax("empty braid word")
    return from_braid(word, name=name)


def to_json(diagram: LinkDiagram) -> str:
    return json.dumps(
        {
            "name": diagram.name,
            "crossings": [list(x.arcs) for x in diagram.crossings],
            "unknot_components": diagram.unknots,
        },
        sort_keys=True,
    )


def from_json(payload: str | dict) -> LinkDiagram:
    data = json.loads(payload) if isinstance(payload, str) else payload
    try:
        crossings = data["crossings"]
        unknots = int(data.get("unknot_components", 0))
    except (KeyError, TypeError, ValueError) as e:
        raise MalformedSyntax(f"diagram JSON missing or invalid field: {e}") from None
    for t in crossings:
        if len(t) != 4:
            raise MalformedSyntax(f"crossing {t} needs 4 arcs")
    if not crossings and not unknots:
        raise MalformedSyntax("diagram JSON has neither crossings nor unknot components")
    return from_tuples(crossings, unknots=unknots, name=data.get("name"))
