# src/harness/__init__.py
"""
Corpus verification harness.

Public API:
    load_corpus(path, validate=True) -> list[KnotRecord]
    run_verification(records, cap=None, workers=None, seed=None) -> VerificationSummary
    render_json(summary), render_markdown(summary)
    write_json_report(summary, path), write_markdown_report(summary, path)
"""
from src.harness.corpus import KnotRecord, load_corpus, parse_record, validate_record
from src.harness.pipeline import RecordOutcome, VerificationSummary, run_verification, verify_record
from src.harness.reports import (
    render_conjecture_table,
    render_json,
    render_markdown,
    write_json_report,
    write_markdown_report,
)

__all__ = [
    "KnotRecord",
    "RecordOutcome",
    "VerificationSummary",
    "load_corpus",
    "parse_record",
    "render_conjecture_table",
    "render_json",
    "render_markdown",
    "run_verification",
    "validate_record",
    "verify_record",
    "write_json_report",
    "write_markdown_report",
]
