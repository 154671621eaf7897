# src/harness/pipeline.py
"""
Verification pipeline: every corpus record through the engine and all
registered checks, concurrently, with a deterministic summary.
"""
import logging
import random
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Optional, Sequence

from src.bounds import BoundsReport, ConjectureRow, Verdict, build_report, conjecture_report
from src.config import get_settings
from src.errors import CrossingCapExceeded
from src.homfly import SkeinEngine
from src.harness.corpus import KnotRecord

logger = logging.getLogger("homfly_bounds.harness")


@dataclass
class RecordOutcome:
    name: str
    status: str                       # "checked" | "skipped" | "error"
    report: Optional[BoundsReport] = None
    error: str = ""
    inconsistencies: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        out = {"name": self.name, "status": self.status}
        if self.report is not None:
            out["report"] = self.report.to_dict()
        if self.error:
            out["error"] = self.error
        if self.inconsistencies:
            out["inconsistencies"] = list(self.inconsistencies)
        return out


@dataclass
class VerificationSummary:
    outcomes: list[RecordOutcome]
    conjecture: list[ConjectureRow]
    seed: int = 0

    @property
    def reports(self) -> list[BoundsReport]:
        return [o.report for o in self.outcomes if o.report is not None]

    def _verdict_count(self, verdict: Verdict) -> int:
        return sum(1 for r in self.reports for v in r.verdicts.values() if v is verdict)

    @property
    def counts(self) -> dict[str, int]:
        return {
            "checked": sum(1 for o in self.outcomes if o.status == "checked"),
            "equalities": self._verdict_count(Verdict.EQUALITY),
            "strict": self._verdict_count(Verdict.STRICT),
            "violated": self._verdict_count(Verdict.VIOLATED),
            "skipped": sum(1 for o in self.outcomes if o.status == "skipped"),
            "errors": sum(1 for o in self.outcomes if o.status == "error"),
            "inconsistencies": sum(len(o.inconsistencies) for o in self.outcomes),
        }

    @property
    def exit_code(self) -> int:
        c = self.counts
        return 1 if c["violated"] or c["errors"] or c["inconsistencies"] else 0

    def to_dict(self) -> dict:
        return {
            "summary": self.counts,
            "seed": self.seed,
            "records": [o.to_dict() for o in self.outcomes],
            "conjecture": [row.to_dict() for row in self.conjecture],
        }


def verify_record(record: KnotRecord, engine: SkeinEngine) -> RecordOutcome:
    d = record.diagram()
    try:
        engine.check_cap(d)
    except CrossingCapExceeded as e:
        logger.warning(f"Skipping {record.name}: {e}")
        return RecordOutcome(record.name, "skipped", error=str(e))

    p = engine.homfly(d)
    inconsistencies = []
    reference = record.reference_polynomial()
    if reference is not None and reference != p:
        inconsistencies.append(f"homfly_ref {reference} != computed {p}")

    report = build_report(
        d, p,
        chi=record.chi,
        chi4=record.chi4,
        sigma=record.sigma,
        split_count=record.split_components,
    )
    if report.graph.is_homogeneous and report.stats.diagram_components != record.split_components:
        inconsistencies.append(
            f"split_components {record.split_components} != {report.stats.diagram_components} pieces"
        )
    for message in inconsistencies:
        logger.error(f"{record.name}: {message}")
    return RecordOutcome(record.name, "checked", report=report, inconsistencies=inconsistencies)


def run_verification(
    records: Sequence[KnotRecord],
    cap: Optional[int] = None,
    workers: Optional[int] = None,
    seed: Optional[int] = None,
) -> VerificationSummary:
    """
    Verify every record on a thread pool. A failing record becomes an
    error outcome; the run itself never aborts. Outcomes are sorted by name.
    """
    settings = get_settings().with_overrides(crossing_cap=cap, max_workers=workers, seed=seed)
    engine = SkeinEngine(cap=settings.crossing_cap)

    order = list(records)
    random.Random(settings.seed).shuffle(order)

    outcomes: list[RecordOutcome] = []
    with ThreadPoolExecutor(max_workers=min(settings.max_workers, len(order) or 1)) as ex:
        futs = {ex.submit(verify_record, record, engine): record for record in order}
        for fut in as_completed(futs):
            record = futs[fut]
            try:
                outcomes.append(fut.result())
            except Exception as e:
                logger.error(f"Verification failed for {record.name}: {e}")
                outcomes.append(RecordOutcome(record.name, "error", error=str(e)))

    outcomes.sort(key=lambda o: o.name)
    summary = VerificationSummary(
        outcomes=outcomes,
        conjecture=conjecture_report(o.report for o in outcomes if o.report is not None),
        seed=settings.seed,
    )
    logger.info(f"Verification finished: {summary.counts}")
    return summary
