# src/bounds/report.py
"""
Per-diagram bounds reports and the equality-case table.
"""
import logging
from dataclasses import dataclass, field
from typing import Iterable, Optional

from src.diagram import DiagramStats, LinkDiagram, is_positive_diagram
from src.homfly import LaurentPoly2, SkeinEngine, highest_z_term, max_deg_z, min_deg_v
from src.seifert import GraphAnalysis
from src.bounds.checks import CheckContext, CheckResult, Verdict, run_checks

logger = logging.getLogger("homfly_bounds.bounds")


@dataclass
class BoundsReport:
    name: str
    stats: DiagramStats
    graph: GraphAnalysis
    polynomial: LaurentPoly2
    positive_diagram: bool
    min_deg_v: int
    max_deg_z: int
    h: str
    h_min_deg_v: int
    rhs_eq1: Optional[int]
    rhs_eq2: int
    rhs_main: Optional[int]
    rhs_slice: Optional[int]
    sigma: Optional[int]
    results: dict[str, CheckResult] = field(default_factory=dict)

    @property
    def verdicts(self) -> dict[str, Verdict]:
        return {name: r.verdict for name, r in self.results.items()}

    @property
    def monomial_witness(self) -> Optional[tuple[int, int, int]]:
        result = self.results.get("theorem_main2")
        return result.witness if result else None

    @property
    def violations(self) -> list[str]:
        return [name for name, r in self.results.items() if r.verdict is Verdict.VIOLATED]

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "stats": self.stats.to_dict(),
            "graph": self.graph.to_dict(),
            "homfly": self.polynomial.to_text(),
            "positive_diagram": self.positive_diagram,
            "min_deg_v": self.min_deg_v,
            "max_deg_z": self.max_deg_z,
            "h": self.h,
            "h_min_deg_v": self.h_min_deg_v,
            "rhs_eq1": self.rhs_eq1,
            "rhs_eq2": self.rhs_eq2,
            "rhs_main": self.rhs_main,
            "rhs_slice": self.rhs_slice,
            "sigma": self.sigma,
            "monomial_witness": list(self.monomial_witness) if self.monomial_witness else None,
            "checks": {name: r.to_dict() for name, r in self.results.items()},
        }


def build_report(
    d: LinkDiagram,
    p: Optional[LaurentPoly2] = None,
    *,
    chi: Optional[int] = None,
    chi4: Optional[int] = None,
    sigma: Optional[int] = None,
    split_count: Optional[int] = None,
    engine: Optional[SkeinEngine] = None,
    checks: Optional[list[str]] = None,
) -> BoundsReport:
    """Compute (or take) P for `d` and run every registered check against it."""
    if p is None:
        p = (engine or SkeinEngine()).homfly(d)
    ctx = CheckContext.build(d, p, chi=chi, chi4=chi4, sigma=sigma, split_count=split_count)
    results = run_checks(ctx, checks)
    h = highest_z_term(p)

    signature = results.get("signature_theorem")
    if signature is not None and signature.verdict.holds:
        sigma_value = signature.rhs
    else:
        sigma_value = sigma

    report = BoundsReport(
        name=d.name or d.to_pd(),
        stats=ctx.stats,
        graph=ctx.analysis,
        polynomial=p,
        positive_diagram=is_positive_diagram(d),
        min_deg_v=min_deg_v(p),
        max_deg_z=max_deg_z(p),
        h=h.to_text(),
        h_min_deg_v=h.min_degree(),
        rhs_eq1=ctx.rhs_eq1,
        rhs_eq2=ctx.rhs_eq2,
        rhs_main=ctx.rhs_main,
        rhs_slice=ctx.rhs_slice,
        sigma=sigma_value,
        results=results,
    )
    logger.debug(f"Report for {report.name}: {sorted(v.value for v in report.verdicts.values())}")
    return report


@dataclass(frozen=True)
class ConjectureRow:
    name: str
    positive_diagram: bool
    main_equality: bool
    slice_equality: Optional[bool]
    h_slice_equality: Optional[bool]

    @property
    def counterexample_candidate(self) -> bool:
        """Equality in a bound on a diagram that is not positive."""
        return (self.main_equality or bool(self.slice_equality)) and not self.positive_diagram

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "positive_diagram": self.positive_diagram,
            "main_equality": self.main_equality,
            "slice_equality": self.slice_equality,
            "h_slice_equality": self.h_slice_equality,
            "counterexample_candidate": self.counterexample_candidate,
        }


def conjecture_report(reports: Iterable[BoundsReport]) -> list[ConjectureRow]:
    """Equality cases of the main and slice bounds against diagram positivity."""
    rows = []
    for report in sorted(reports, key=lambda r: r.name):
        if not report.graph.is_homogeneous:
            continue
        main = report.results.get("theorem_main")
        slice_ = report.results.get("slice_cromwell")
        slice_applies = slice_ is not None and slice_.verdict is not Verdict.NOT_APPLICABLE
        row = ConjectureRow(
            name=report.name,
            positive_diagram=report.positive_diagram,
            main_equality=main is not None and main.verdict is Verdict.EQUALITY,
            slice_equality=(slice_.verdict is Verdict.EQUALITY) if slice_applies else None,
            h_slice_equality=(report.h_min_deg_v == report.rhs_slice) if report.rhs_slice is not None else None,
        )
        if row.counterexample_candidate:
            logger.warning(f"Equality without a positive diagram: {row.name}")
        rows.append(row)
    return rows
