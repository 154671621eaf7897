# src/bounds/__init__.py
"""
Degree bounds, identities and equality cases.

Public API:
    build_report(d, p=None, chi=, chi4=, sigma=, split_count=) -> BoundsReport
    conjecture_report(reports) -> list[ConjectureRow]
    check_cromwell_diagram, check_cromwell_link, check_theorem_main,
    check_theorem_main2, check_slice_cromwell, check_signature_theorem,
    check_mfw, check_prop_key, check_chain, check_structure -> CheckResult
    Verdict, CheckContext, run_checks

Check registry:
    list_checks() -> list[str]
    get_check(name) -> Callable[[CheckContext], CheckResult]
"""
from src.bounds.checks import (
    CheckContext,
    CheckResult,
    Verdict,
    check_chain,
    check_cromwell_diagram,
    check_cromwell_link,
    check_mfw,
    check_prop_key,
    check_signature_theorem,
    check_slice_cromwell,
    check_structure,
    check_theorem_main,
    check_theorem_main2,
    compare,
    diagram_signature,
    get_check,
    list_checks,
    register,
    run_checks,
)
from src.bounds.report import BoundsReport, ConjectureRow, build_report, conjecture_report

__all__ = [
    "BoundsReport",
    "CheckContext",
    "CheckResult",
    "ConjectureRow",
    "Verdict",
    "build_report",
    "check_chain",
    "check_cromwell_diagram",
    "check_cromwell_link",
    "check_mfw",
    "check_prop_key",
    "check_signature_theorem",
    "check_slice_cromwell",
    "check_structure",
    "check_theorem_main",
    "check_theorem_main2",
    "compare",
    "conjecture_report",
    "diagram_signature",
    "get_check",
    "list_checks",
    "register",
    "run_checks",
]
