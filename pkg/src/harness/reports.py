# src/harness/reports.py
"""JSON and markdown renderings of a verification run."""
import json
import logging
from pathlib import Path

from src.bounds import ConjectureRow
from src.harness.pipeline import VerificationSummary

logger = logging.getLogger("homfly_bounds.harness")

_CHECK_COLUMNS = (
    ("cromwell_diagram", "Eq2"),
    ("theorem_main", "main"),
    ("theorem_main2", "top-z"),
    ("slice_cromwell", "slice"),
    ("signature_theorem", "sigma"),
    ("prop_key", "sum eps*rank"),
    ("mfw", "MFW"),
    ("chain", "chain"),
)


def render_json(summary: VerificationSummary) -> str:
    return json.dumps(summary.to_dict(), sort_keys=True, indent=2)


def _cell(value) -> str:
    return "" if value is None else str(value)


def _flag(value) -> str:
    if value is None:
        return ""
    return "yes" if value else "no"


def render_conjecture_table(rows: list[ConjectureRow]) -> str:
    lines = [
        "| name | positive diagram | main equality | slice equality | top-z slice equality | counterexample |",
        "|---|---|---|---|---|---|",
    ]
    for row in rows:
        lines.append(
            f"| {row.name} | {_flag(row.positive_diagram)} | {_flag(row.main_equality)} "
            f"| {_flag(row.slice_equality)} | {_flag(row.h_slice_equality)} "
            f"| {'**YES**' if row.counterexample_candidate else 'no'} |"
        )
    return "\n".join(lines)


def render_markdown(summary: VerificationSummary) -> str:
    counts = summary.counts
    header = ["name", "s", "c", "w", "s+", "min_deg_v", "1-chi", "-s+c+1", "main rhs", "1-chi4", "sigma"]
    header += [label for _, label in _CHECK_COLUMNS]
    lines = [
        "# Verification report",
        "",
        ", ".join(f"{k}: {v}" for k, v in counts.items()) + f" (seed {summary.seed})",
        "",
        "| " + " | ".join(header) + " |",
        "|" + "---|" * len(header),
    ]
    for outcome in summary.outcomes:
        r = outcome.report
        if r is None:
            lines.append(f"| {outcome.name} | {outcome.status}: {outcome.error} |")
            continue
        st = r.stats
        cells = [r.name, st.s, st.c, st.w, st.s_plus, r.min_deg_v, _cell(r.rhs_eq1), r.rhs_eq2,
                 _cell(r.rhs_main), _cell(r.rhs_slice), _cell(r.sigma)]
        cells += [r.results[name].verdict.value if name in r.results else "" for name, _ in _CHECK_COLUMNS]
        lines.append("| " + " | ".join(str(c) for c in cells) + " |")

    problems = [o for o in summary.outcomes if o.inconsistencies]
    if problems:
        lines += ["", "## Inconsistencies", ""]
        lines += [f"- {o.name}: {msg}" for o in problems for msg in o.inconsistencies]

    lines += ["", "## Equality cases", "", render_conjecture_table(summary.conjecture), ""]
    return "\n".join(lines)


def write_json_report(summary: VerificationSummary, path: str | Path) -> Path:
    path = Path(path)
    path.write_text(render_json(summary), encoding="utf-8")
    logger.info(f"Wrote JSON report to {path}")
    return path


def write_markdown_report(summary: VerificationSummary, path: str | Path) -> Path:
    path = Path(path)
    path.write_text(render_markdown(summary), encoding="utf-8")
    logger.info(f"Wrote markdown report to {path}")
    return path
