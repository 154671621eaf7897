# tests/test_bounds.py
"""
Tests for src/bounds/ (degree bounds, identities, check registry, reports)

Each check runs on real engine output; expected verdicts follow from the
hand-computed diagram data (s, c, w, s_plus) of the knots involved.
"""
import pytest

from src.bounds import (
    CheckContext,
    Verdict,
    build_report,
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
    conjecture_report,
    get_check,
    list_checks,
    register,
    run_checks,
)
from src.diagram import connected_count, is_positive_diagram, parse_pd, stats
from src.errors import MissingChi4, NotAlternating, NotHomogeneous, SignatureMismatch
from src.homfly import homfly, max_deg_z
from src.seifert import analyze, build_seifert_graph
from tests.conftest import TREFOIL_PD, bundled


class TestCompare:
    def test_verdicts(self):
        assert compare(1, 1) is Verdict.EQUALITY
        assert compare(0, 1) is Verdict.STRICT
        assert compare(2, 1) is Verdict.VIOLATED
        assert Verdict.EQUALITY.holds and Verdict.STRICT.holds
        assert not Verdict.VIOLATED.holds and not Verdict.NOT_APPLICABLE.holds


# ─────────────────────────────────────────────────────────────────────────────
# Individual checks
# ─────────────────────────────────────────────────────────────────────────────

class TestTrefoilChecks:
    @pytest.fixture
    def poly(self, trefoil):
        return homfly(trefoil)

    def test_cromwell_diagram(self, trefoil, poly):
        r = check_cromwell_diagram(trefoil, poly)
        assert (r.lhs, r.rhs, r.verdict) == (2, 2, Verdict.EQUALITY)

    def test_cromwell_link(self, trefoil, poly):
        r = check_cromwell_link(trefoil, poly, chi=-1)
        assert (r.lhs, r.rhs, r.verdict) == (2, 2, Verdict.EQUALITY)

    def test_main_bound(self, trefoil, poly):
        r = check_theorem_main(trefoil, poly)
        assert (r.lhs, r.rhs, r.verdict) == (2, 2, Verdict.EQUALITY)

    def test_top_z_monomial(self, trefoil, poly):
        r = check_theorem_main2(trefoil, poly)
        assert r.verdict is Verdict.EQUALITY
        assert (r.lhs, r.rhs) == (2, 2)
        assert r.witness == (2, 2, 1)

    def test_slice_bound(self, trefoil, poly):
        r = check_slice_cromwell(trefoil, poly, chi4=-1)
        assert (r.lhs, r.rhs, r.verdict) == (2, 2, Verdict.EQUALITY)
        assert "attains" in r.detail

    def test_slice_bound_needs_chi4(self, trefoil, poly):
        with pytest.raises(MissingChi4):
            check_slice_cromwell(trefoil, poly, chi4=None)

    def test_signature_bound(self, trefoil, poly):
        r = check_signature_theorem(trefoil, poly, recorded_sigma=2)
        assert (r.lhs, r.rhs, r.verdict) == (2, 2, Verdict.EQUALITY)

    def test_signature_mismatch(self, trefoil, poly):
        with pytest.raises(SignatureMismatch):
            check_signature_theorem(trefoil, poly, recorded_sigma=-2)

    def test_mfw(self, trefoil, poly):
        r = check_mfw(trefoil, poly)
        assert (r.lhs, r.rhs, r.verdict) == (2, 2, Verdict.EQUALITY)

    def test_prop_key(self, trefoil):
        r = check_prop_key(trefoil)
        assert (r.lhs, r.rhs, r.verdict) == (2, 2, Verdict.EQUALITY)

    def test_structure(self, trefoil, poly):
        assert check_structure(trefoil, poly).verdict is Verdict.EQUALITY


class TestOtherDiagrams:
    def test_figure_eight_is_strict(self, figure_eight):
        p = homfly(figure_eight)
        assert check_cromwell_diagram(figure_eight, p).verdict is Verdict.STRICT
        r = check_theorem_main(figure_eight, p)
        assert (r.lhs, r.rhs, r.verdict) == (-2, 0, Verdict.STRICT)
        assert check_signature_theorem(figure_eight, p).verdict is Verdict.STRICT

    def test_figure_eight_witness(self, figure_eight):
        r = check_theorem_main2(figure_eight, homfly(figure_eight))
        assert r.verdict is Verdict.EQUALITY
        assert r.witness == (0, 2, -1)

    def test_six_one_top_part_attains_the_slice_bound(self, six_one):
        r = check_slice_cromwell(six_one, homfly(six_one), chi4=1)
        assert (r.lhs, r.rhs, r.verdict) == (-2, 0, Verdict.STRICT)
        assert "min_deg_v(h) = 0 (attains 1 - chi4)" in r.detail

    def test_split_diagram_main_bound(self, trefoil):
        d = parse_pd(TREFOIL_PD + ",U(1)")
        p = homfly(d)
        r = check_theorem_main(d, p)
        assert r.verdict.holds
        assert check_theorem_main2(d, p).witness is None

    def test_non_homogeneous_diagram(self, cancelling_pair):
        p = homfly(cancelling_pair)
        with pytest.raises(NotHomogeneous):
            check_cromwell_diagram(cancelling_pair, p)
        with pytest.raises(NotAlternating):
            check_signature_theorem(cancelling_pair, p)
        assert check_mfw(cancelling_pair, p).verdict is Verdict.EQUALITY

    def test_recorded_chi_scope(self, kink, cancelling_pair):
        # a kinked unknot is homogeneous even though it is not minimal
        r = check_cromwell_link(kink, homfly(kink), chi=1)
        assert (r.lhs, r.rhs, r.verdict) == (0, 0, Verdict.EQUALITY)
        p = homfly(cancelling_pair)
        with pytest.raises(NotHomogeneous):
            check_cromwell_link(cancelling_pair, p, chi=2)
        ctx = CheckContext.build(cancelling_pair, p, chi=2, split_count=2)
        assert run_checks(ctx, ["cromwell_link"])["cromwell_link"].verdict is Verdict.NOT_APPLICABLE

    def test_unreduced_diagram_uses_recorded_signature(self, kink):
        r = check_signature_theorem(kink, homfly(kink), recorded_sigma=0)
        assert r.verdict is Verdict.EQUALITY
        assert "recorded" in r.detail

    def test_chain(self):
        assert check_chain(2, 2, 2).verdict is Verdict.EQUALITY
        assert check_chain(0, 2, 4).verdict is Verdict.STRICT
        assert check_chain(3, 2, None).verdict is Verdict.VIOLATED
        assert check_chain(1, None, None).verdict is Verdict.NOT_APPLICABLE


def _connected_homogeneous(d) -> bool:
    return connected_count(d) == 1 and analyze(build_seifert_graph(d)).is_homogeneous


class TestCorpusEqualities:
    @pytest.mark.parametrize("record", bundled(is_positive_diagram))
    def test_positive_diagrams_attain_both_bounds(self, record):
        d = record.diagram()
        p = homfly(d)
        assert check_slice_cromwell(d, p, record.chi4).verdict is Verdict.EQUALITY
        assert check_cromwell_diagram(d, p).verdict is Verdict.EQUALITY

    @pytest.mark.parametrize("record", bundled(_connected_homogeneous))
    def test_top_z_degree_of_a_connected_homogeneous_diagram(self, record):
        d = record.diagram()
        st = stats(d)
        assert max_deg_z(homfly(d)) == st.c - st.s + 1


# ─────────────────────────────────────────────────────────────────────────────
# Registry and reports
# ─────────────────────────────────────────────────────────────────────────────

class TestRegistry:
    def test_registered_checks(self):
        names = list_checks()
        for name in ("cromwell_diagram", "cromwell_link", "theorem_main", "theorem_main2",
                     "slice_cromwell", "signature_theorem", "prop_key", "mfw", "structure", "chain"):
            assert name in names

    def test_unknown_check(self):
        with pytest.raises(ValueError, match="Unknown check"):
            get_check("nope")

    def test_register_and_run(self, trefoil):
        from src.bounds.checks import _REGISTRY, CheckResult

        @register("always_strict")
        def _always(ctx):
            return CheckResult("always_strict", Verdict.STRICT, 0, 1)

        try:
            ctx = CheckContext.build(trefoil, homfly(trefoil))
            results = run_checks(ctx, ["always_strict", "slice_cromwell"])
            assert results["always_strict"].verdict is Verdict.STRICT
            assert results["slice_cromwell"].verdict is Verdict.NOT_APPLICABLE
        finally:
            _REGISTRY.pop("always_strict", None)

    def test_signature_mismatch_becomes_a_violation(self, trefoil):
        ctx = CheckContext.build(trefoil, homfly(trefoil), sigma=0)
        assert run_checks(ctx, ["signature_theorem"])["signature_theorem"].verdict is Verdict.VIOLATED


class TestReport:
    def test_trefoil_report(self, trefoil):
        report = build_report(trefoil, chi4=-1, sigma=2)
        assert report.min_deg_v == 2
        assert report.max_deg_z == 2
        assert report.h == "v^2"
        assert report.rhs_eq1 == 2 and report.rhs_eq2 == 2
        assert report.rhs_main == 2 and report.rhs_slice == 2
        assert report.sigma == 2
        assert report.monomial_witness == (2, 2, 1)
        assert report.violations == []
        assert report.verdicts["cromwell_link"] is Verdict.NOT_APPLICABLE
        assert report.verdicts["chain"] is Verdict.EQUALITY

    def test_non_homogeneous_report(self, cancelling_pair):
        report = build_report(cancelling_pair, split_count=2)
        assert report.rhs_main is None
        assert report.verdicts["theorem_main"] is Verdict.NOT_APPLICABLE
        assert report.verdicts["prop_key"] is Verdict.NOT_APPLICABLE
        assert report.violations == []

    def test_to_dict(self, trefoil):
        data = build_report(trefoil).to_dict()
        assert data["homfly"] == "-v^4 + 2*v^2 + v^2*z^2"
        assert data["checks"]["theorem_main"]["verdict"] == "equality"
        assert data["monomial_witness"] == [2, 2, 1]

    def test_conjecture_rows(self, trefoil, six_one, cancelling_pair):
        reports = [
            build_report(six_one, chi4=1),
            build_report(trefoil, chi4=-1),
            build_report(cancelling_pair, split_count=2),
        ]
        rows = conjecture_report(reports)
        assert [row.name for row in rows] == ["3_1", "6_1"]
        trefoil_row, six_one_row = rows
        assert trefoil_row.main_equality and trefoil_row.positive_diagram
        assert not trefoil_row.counterexample_candidate
        assert six_one_row.h_slice_equality is True
        assert six_one_row.slice_equality is False
        assert not six_one_row.counterexample_candidate
