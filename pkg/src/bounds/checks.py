# src/bounds/checks.py
"""
Check registry + the degree bounds and identities evaluated per diagram.

Each public check_* function takes the diagram and its HOMFLY polynomial (and
whatever external datum it needs) and returns a CheckResult. Registered
checks take a CheckContext instead, so the report builder can run all of them
uniformly:

    @register("name")
    def _check(ctx: CheckContext) -> CheckResult

A check whose precondition fails raises the matching library error
(NotHomogeneous, NotAlternating, MissingChi4, ...); the report builder records
that as not-applicable. A VIOLATED verdict is never expected on valid input.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional

from src.diagram import (
    DiagramStats,
    LinkDiagram,
    connected_count,
    is_alternating,
    split_components,
    stats,
)
from src.errors import (
    DisconnectedDiagram,
    MissingChi4,
    NotAlternating,
    NotHomogeneous,
    NotReduced,
    SignatureMismatch,
)
from src.homfly import (
    LaurentPoly2,
    coefficient,
    highest_z_term,
    max_deg_v,
    max_deg_z,
    min_deg_v,
    parity_ok,
    unit_check,
)
from src.seifert import GraphAnalysis, analyze, build_seifert_graph, prop_key_rhs, traczyk_signature

logger = logging.getLogger("homfly_bounds.bounds")


class Verdict(str, Enum):
    EQUALITY = "equality"
    STRICT = "strict"
    VIOLATED = "violated"
    NOT_APPLICABLE = "n/a"

    @property
    def holds(self) -> bool:
        return self in (Verdict.EQUALITY, Verdict.STRICT)


def compare(lhs: int, rhs: int) -> Verdict:
    """Verdict on lhs <= rhs."""
    if lhs == rhs:
        return Verdict.EQUALITY
    return Verdict.STRICT if lhs < rhs else Verdict.VIOLATED


@dataclass(frozen=True)
class CheckResult:
    name: str
    verdict: Verdict
    lhs: Optional[int] = None
    rhs: Optional[int] = None
    detail: str = ""
    witness: Optional[tuple[int, int, int]] = None

    def to_dict(self) -> dict:
        out = {"verdict": self.verdict.value, "lhs": self.lhs, "rhs": self.rhs}
        if self.detail:
            out["detail"] = self.detail
        if self.witness is not None:
            out["witness"] = list(self.witness)
        return out


def _analysis_of(d: LinkDiagram, analysis: Optional[GraphAnalysis]) -> GraphAnalysis:
    return analysis if analysis is not None else analyze(build_seifert_graph(d))


def _require_homogeneous(d: LinkDiagram, analysis: GraphAnalysis) -> None:
    if not analysis.is_homogeneous:
        raise NotHomogeneous(f"{d.name or 'diagram'} has a mixed block in its Seifert graph")


def main_rhs(st: DiagramStats, split_number: int) -> int:
    """-s + w + 2*s_plus + 1 - 2*#sp"""
    return -st.s + st.w + 2 * st.s_plus + 1 - 2 * split_number


# ── the bounds ───────────────────────────────────────────────────────────────

def check_cromwell_diagram(d: LinkDiagram, p: LaurentPoly2,
                           analysis: Optional[GraphAnalysis] = None) -> CheckResult:
    """min_deg_v P <= -s + c + 1 for a homogeneous diagram."""
    analysis = _analysis_of(d, analysis)
    _require_homogeneous(d, analysis)
    st = stats(d)
    lhs, rhs = min_deg_v(p), -st.s + st.c + 1
    return CheckResult("cromwell_diagram", compare(lhs, rhs), lhs, rhs)


def check_cromwell_link(d: LinkDiagram, p: LaurentPoly2, chi: int,
                        analysis: Optional[GraphAnalysis] = None) -> CheckResult:
    """min_deg_v P <= 1 - chi, with chi the recorded Seifert-surface Euler characteristic."""
    analysis = _analysis_of(d, analysis)
    _require_homogeneous(d, analysis)
    lhs, rhs = min_deg_v(p), 1 - chi
    return CheckResult("cromwell_link", compare(lhs, rhs), lhs, rhs)


def check_theorem_main(d: LinkDiagram, p: LaurentPoly2,
                       analysis: Optional[GraphAnalysis] = None) -> CheckResult:
    """min_deg_v P <= -s + w + 2*s_plus + 1 - 2*#sp, with #sp the connected piece count."""
    analysis = _analysis_of(d, analysis)
    _require_homogeneous(d, analysis)
    st = stats(d)
    lhs, rhs = min_deg_v(p), main_rhs(st, st.diagram_components)
    return CheckResult("theorem_main", compare(lhs, rhs), lhs, rhs)


def check_theorem_main2(d: LinkDiagram, p: LaurentPoly2,
                        analysis: Optional[GraphAnalysis] = None) -> CheckResult:
    """
    Highest-z-degree structure of a homogeneous diagram's polynomial.

    The top z-degree is rank(G) - (#sp - 1) and its v-polynomial h contains
    v^(rhs of the main bound). For a connected diagram the monomial
    v^(sum eps*rank) z^rank is also required; it is returned as the witness.
    """
    analysis = _analysis_of(d, analysis)
    _require_homogeneous(d, analysis)
    st = stats(d)
    pieces = st.diagram_components
    exponent = main_rhs(st, pieces)
    h = highest_z_term(p)
    top, expected_top = max_deg_z(p), analysis.rank - (pieces - 1)

    problems = []
    if top != expected_top:
        problems.append(f"max_deg_z {top} != {expected_top}")
    if h.coefficient(exponent) == 0:
        problems.append(f"h has no v^{exponent} term")

    witness = None
    if pieces == 1:
        a, b = analysis.eps_rank_sum, analysis.rank
        c = coefficient(p, a, b)
        witness = (a, b, c)
        if c == 0:
            problems.append(f"coefficient of v^{a} z^{b} is 0")

    verdict = Verdict.VIOLATED if problems else Verdict.EQUALITY
    detail = "; ".join(problems) or f"h = {h}"
    return CheckResult("theorem_main2", verdict, top, expected_top, detail, witness)


def check_slice_cromwell(d: LinkDiagram, p: LaurentPoly2, chi4: Optional[int],
                         analysis: Optional[GraphAnalysis] = None) -> CheckResult:
    """min_deg_v P <= 1 - chi4; the detail also compares min_deg_v of the top-z part."""
    if chi4 is None:
        raise MissingChi4(f"no 4-ball Euler characteristic recorded for {d.name or 'diagram'}")
    analysis = _analysis_of(d, analysis)
    _require_homogeneous(d, analysis)
    lhs, rhs = min_deg_v(p), 1 - chi4
    h_min = highest_z_term(p).min_degree()
    detail = f"min_deg_v(h) = {h_min}" + (" (attains 1 - chi4)" if h_min == rhs else "")
    return CheckResult("slice_cromwell", compare(lhs, rhs), lhs, rhs, detail)


def diagram_signature(d: LinkDiagram) -> int:
    """Spanning-tree signature summed over the connected pieces of an alternating diagram."""
    return sum(traczyk_signature(piece) for piece in split_components(d))


def check_signature_theorem(d: LinkDiagram, p: LaurentPoly2,
                            recorded_sigma: Optional[int] = None) -> CheckResult:
    """min_deg_v P + #sp - 1 <= sigma for an alternating diagram."""
    if not is_alternating(d):
        raise NotAlternating(f"{d.name or 'diagram'} is not alternating")
    detail = ""
    try:
        sigma = diagram_signature(d)
    except NotReduced:
        if recorded_sigma is None:
            raise
        sigma = recorded_sigma
        detail = "diagram not reduced; recorded signature used"
    else:
        if recorded_sigma is not None and recorded_sigma != sigma:
            raise SignatureMismatch(
                f"{d.name or 'diagram'}: spanning-tree signature {sigma}, recorded {recorded_sigma}"
            )
    pieces = connected_count(d)
    lhs = min_deg_v(p) + pieces - 1
    return CheckResult("signature_theorem", compare(lhs, sigma), lhs, sigma, detail)


def check_mfw(d: LinkDiagram, p: LaurentPoly2) -> CheckResult:
    """w - s + 1 <= min_deg_v P and max_deg_v P <= w + s - 1."""
    st = stats(d)
    lower, upper = st.w - st.s + 1, st.w + st.s - 1
    low, high = min_deg_v(p), max_deg_v(p)
    verdict = compare(lower, low)
    if high > upper:
        verdict = Verdict.VIOLATED
    detail = f"max_deg_v {high} <= {upper}" if high <= upper else f"max_deg_v {high} > {upper}"
    return CheckResult("mfw", verdict, lower, low, detail)


def check_prop_key(d: LinkDiagram, analysis: Optional[GraphAnalysis] = None) -> CheckResult:
    """sum eps*rank over blocks == -s + w + 2*s_plus - 1 for a connected homogeneous diagram."""
    analysis = _analysis_of(d, analysis)
    _require_homogeneous(d, analysis)
    lhs, rhs = analysis.eps_rank_sum, prop_key_rhs(d)
    verdict = Verdict.EQUALITY if lhs == rhs else Verdict.VIOLATED
    return CheckResult("prop_key", verdict, lhs, rhs)


def check_chain(rhs_main: Optional[int], rhs_slice: Optional[int],
                rhs_eq1: Optional[int]) -> CheckResult:
    """rhs_main <= 1 - chi4 <= 1 - chi over whichever terms are defined."""
    terms = [(n, v) for n, v in (("main", rhs_main), ("slice", rhs_slice), ("eq1", rhs_eq1))
             if v is not None]
    if len(terms) < 2:
        return CheckResult("chain", Verdict.NOT_APPLICABLE, detail="fewer than two bounds defined")
    broken = [f"{a} {x} > {b} {y}" for (a, x), (b, y) in zip(terms, terms[1:]) if x > y]
    if broken:
        verdict = Verdict.VIOLATED
    elif all(v == terms[0][1] for _, v in terms):
        verdict = Verdict.EQUALITY
    else:
        verdict = Verdict.STRICT
    return CheckResult("chain", verdict, terms[0][1], terms[-1][1], "; ".join(broken))


def check_structure(d: LinkDiagram, p: LaurentPoly2) -> CheckResult:
    """Exponent parity and the z = v^-1 - v specialisation."""
    problems = []
    if not parity_ok(p, d.component_count):
        problems.append("exponent parity")
    if not unit_check(p):
        problems.append("P(v, v^-1 - v) != 1")
    verdict = Verdict.VIOLATED if problems else Verdict.EQUALITY
    return CheckResult("structure", verdict, detail=", ".join(problems))


# ── context + registry ───────────────────────────────────────────────────────

@dataclass
class CheckContext:
    diagram: LinkDiagram
    poly: LaurentPoly2
    stats: DiagramStats
    analysis: GraphAnalysis
    chi: Optional[int] = None
    chi4: Optional[int] = None
    sigma: Optional[int] = None
    split_count: Optional[int] = None
    results: dict[str, CheckResult] = field(default_factory=dict)

    @classmethod
    def build(cls, d: LinkDiagram, p: LaurentPoly2, **data) -> "CheckContext":
        return cls(d, p, stats(d), analyze(build_seifert_graph(d)), **data)

    @property
    def homogeneous(self) -> bool:
        return self.analysis.is_homogeneous

    @property
    def split_number(self) -> Optional[int]:
        # homogeneous diagrams are non-split on each connected piece
        if self.homogeneous:
            return self.stats.diagram_components
        return self.split_count

    @property
    def chi_value(self) -> Optional[int]:
        if self.chi is not None:
            return self.chi
        return self.stats.s - self.stats.c if self.homogeneous else None

    @property
    def rhs_eq1(self) -> Optional[int]:
        return None if self.chi_value is None else 1 - self.chi_value

    @property
    def rhs_eq2(self) -> int:
        return -self.stats.s + self.stats.c + 1

    @property
    def rhs_main(self) -> Optional[int]:
        return main_rhs(self.stats, self.split_number) if self.homogeneous else None

    @property
    def rhs_slice(self) -> Optional[int]:
        return None if self.chi4 is None else 1 - self.chi4


_REGISTRY: dict[str, Callable[[CheckContext], CheckResult]] = {}


def register(name: str) -> Callable:
    def decorator(fn: Callable) -> Callable:
        _REGISTRY[name] = fn
        return fn
    return decorator


def get_check(name: str) -> Callable[[CheckContext], CheckResult]:
    if name not in _REGISTRY:
        raise ValueError(f"Unknown check: {name!r}. Available: {list(_REGISTRY)}")
    return _REGISTRY[name]


def list_checks() -> list[str]:
    return list(_REGISTRY.keys())


def run_checks(ctx: CheckContext, names: Optional[list[str]] = None) -> dict[str, CheckResult]:
    """Run checks in registry order; precondition failures become not-applicable."""
    for name in names or list_checks():
        try:
            result = get_check(name)(ctx)
        except (NotHomogeneous, NotAlternating, NotReduced, MissingChi4, DisconnectedDiagram) as e:
            result = CheckResult(name, Verdict.NOT_APPLICABLE, detail=str(e))
        except SignatureMismatch as e:
            result = CheckResult(name, Verdict.VIOLATED, detail=str(e))
        ctx.results[name] = result
        if result.verdict is Verdict.VIOLATED:
            logger.error(f"{ctx.diagram.name or 'diagram'}: {name} violated ({result.detail or result.lhs} vs {result.rhs})")
    return ctx.results


@register("cromwell_diagram")
def _cromwell_diagram(ctx: CheckContext) -> CheckResult:
    return check_cromwell_diagram(ctx.diagram, ctx.poly, ctx.analysis)


@register("cromwell_link")
def _cromwell_link(ctx: CheckContext) -> CheckResult:
    if ctx.chi is None:
        return CheckResult("cromwell_link", Verdict.NOT_APPLICABLE, detail="no recorded chi")
    return check_cromwell_link(ctx.diagram, ctx.poly, ctx.chi, ctx.analysis)


@register("theorem_main")
def _theorem_main(ctx: CheckContext) -> CheckResult:
    return check_theorem_main(ctx.diagram, ctx.poly, ctx.analysis)


@register("theorem_main2")
def _theorem_main2(ctx: CheckContext) -> CheckResult:
    return check_theorem_main2(ctx.diagram, ctx.poly, ctx.analysis)


@register("slice_cromwell")
def _slice_cromwell(ctx: CheckContext) -> CheckResult:
    return check_slice_cromwell(ctx.diagram, ctx.poly, ctx.chi4, ctx.analysis)


@register("signature_theorem")
def _signature_theorem(ctx: CheckContext) -> CheckResult:
    return check_signature_theorem(ctx.diagram, ctx.poly, ctx.sigma)


@register("prop_key")
def _prop_key(ctx: CheckContext) -> CheckResult:
    return check_prop_key(ctx.diagram, ctx.analysis)


@register("mfw")
def _mfw(ctx: CheckContext) -> CheckResult:
    return check_mfw(ctx.diagram, ctx.poly)


@register("structure")
def _structure(ctx: CheckContext) -> CheckResult:
    return check_structure(ctx.diagram, ctx.poly)


@register("chain")
def _chain(ctx: CheckContext) -> CheckResult:
    return check_chain(ctx.rhs_main, ctx.rhs_slice, ctx.rhs_eq1)
