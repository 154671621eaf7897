# src/errors.py
"""
Exception hierarchy for homfly-bounds.

Every error raised by the diagram, seifert, homfly, bounds and harness packages
derives from HomflyBoundsError so callers (the verification harness, the CLI)
can catch one type and record the failure against the record being processed.
"""


class HomflyBoundsError(Exception):
    """Base class for all library errors."""


# ── diagram ──────────────────────────────────────────────────────────────────

class MalformedSyntax(HomflyBoundsError):
    """A PD / braid / polynomial text could not be tokenised or has the wrong arity."""


class InconsistentDiagram(HomflyBoundsError):
    """Arc usage or orientation of a PD code does not describe closed oriented curves."""


class IndexOutOfRange(HomflyBoundsError, IndexError):
    """A crossing index does not address a crossing of the diagram."""


class DisconnectedDiagram(HomflyBoundsError):
    """The operation needs a diagram with exactly one connected component."""


# ── seifert ──────────────────────────────────────────────────────────────────

class NotHomogeneous(HomflyBoundsError):
    """The Seifert graph has a block containing edges of both signs."""


class NotAlternating(HomflyBoundsError):
    """Some component does not alternate over/under along its crossings."""


class NotReduced(HomflyBoundsError):
    """The diagram has a nugatory crossing."""


# ── homfly ───────────────────────────────────────────────────────────────────

class CrossingCapExceeded(HomflyBoundsError):
    """The diagram has more crossings than the configured engine cap."""

    def __init__(self, crossings: int, cap: int):
        self.crossings = crossings
        self.cap = cap
        super().__init__(f"diagram has {crossings} crossings, cap is {cap}")


class ZeroPolynomial(HomflyBoundsError):
    """A degree query was made on the zero polynomial."""


# ── bounds ───────────────────────────────────────────────────────────────────

class MissingChi4(HomflyBoundsError):
    """The slice Cromwell check needs a 4-ball Euler characteristic."""


class SignatureMismatch(HomflyBoundsError):
    """Spanning-tree signature disagrees with the recorded signature."""


# ── harness ──────────────────────────────────────────────────────────────────

class SchemaError(HomflyBoundsError):
    """A corpus file or record does not match the documented schema."""


class CorpusInconsistency(HomflyBoundsError):
    """A corpus record's declared data disagrees with the computed classification."""
