# tests/test_harness.py
"""
Tests for src/harness/ (corpus ingestion, verification pipeline, reports)

The bundled corpus is verified end to end; schema and consistency failures are
exercised with small corpora written to tmp_path.
"""
import json

import pytest

from src.bounds import Verdict
from src.errors import CorpusInconsistency, SchemaError
from src.harness import (
    KnotRecord,
    load_corpus,
    parse_record,
    render_json,
    render_markdown,
    run_verification,
    validate_record,
    verify_record,
    write_json_report,
    write_markdown_report,
)
from src.homfly import SkeinEngine
from tests.conftest import TREFOIL_HOMFLY, TREFOIL_PD

HEADER = "name,pd,braid,alternating,positive_diagram,homogeneous,chi,chi4,sigma,homfly_ref,split_components,source\n"
PRIME_KNOTS = ["3_1", "4_1"] + [
    f"{c}_{i}" for c, count in ((5, 2), (6, 3), (7, 7), (8, 21), (9, 49)) for i in range(1, count + 1)
]


def _row(**values) -> dict:
    return {"name": "k", "pd": TREFOIL_PD, **values}


# ─────────────────────────────────────────────────────────────────────────────
# Records
# ─────────────────────────────────────────────────────────────────────────────

class TestParseRecord:
    def test_minimal_record(self):
        record = parse_record(_row())
        assert record.split_components == 1
        assert record.diagram().crossing_count == 3
        assert record.reference_polynomial() is None

    def test_typed_columns(self):
        record = parse_record(_row(alternating="yes", chi="-1", sigma=" 2 ", homfly_ref=TREFOIL_HOMFLY))
        assert record.alternating is True
        assert record.chi == -1
        assert record.sigma == 2
        assert record.reference_polynomial().to_text() == "-v^4 + 2*v^2 + v^2*z^2"

    def test_braid_record(self):
        record = parse_record({"name": "b", "braid": "1 1 1"})
        assert record.diagram().crossing_count == 3

    @pytest.mark.parametrize("row", [
        {"pd": TREFOIL_PD},
        {"name": "k", "pd": TREFOIL_PD, "braid": "1 1 1"},
        {"name": "k"},
        {"name": "k", "pd": TREFOIL_PD, "colour": "red"},
        {"name": "k", "pd": TREFOIL_PD, "alternating": "maybe"},
        {"name": "k", "pd": TREFOIL_PD, "chi": "one"},
        {"name": "k", "pd": TREFOIL_PD, "split_components": "0"},
        {"name": "k", "pd": "X(1,2,3)"},
        {"name": "k", "pd": TREFOIL_PD, "homfly_ref": "v^(1/2)"},
    ])
    def test_schema_errors(self, row):
        with pytest.raises(SchemaError):
            parse_record(row)


class TestValidateRecord:
    def test_declared_flags_must_match(self):
        record = parse_record({"name": "m", "pd": "X(4,2,5,1),X(6,4,1,3),X(2,6,3,5)", "positive_diagram": "true"})
        with pytest.raises(CorpusInconsistency, match="positive_diagram"):
            validate_record(record)

    def test_chi4_below_chi(self):
        record = parse_record(_row(chi="-1", chi4="-3"))
        with pytest.raises(CorpusInconsistency, match="chi4"):
            validate_record(record)

    def test_consistent_record(self):
        validate_record(parse_record(_row(alternating="true", positive_diagram="true", homogeneous="true")))


# ─────────────────────────────────────────────────────────────────────────────
# Corpus files
# ─────────────────────────────────────────────────────────────────────────────

class TestLoadCorpus:
    def test_bundled_corpus(self, corpus, corpus_by_name):
        assert len(PRIME_KNOTS) == 84
        assert len(corpus) == len(PRIME_KNOTS) + 13
        assert len(corpus_by_name) == len(corpus)
        assert corpus_by_name["3_1"].sigma == 2
        assert corpus_by_name["3_1_braid"].braid == "1 2 1 2"

    @pytest.mark.parametrize("name", PRIME_KNOTS)
    def test_every_prime_knot_up_to_nine_crossings(self, corpus_by_name, name):
        record = corpus_by_name[name]
        assert record.diagram().component_count == 1
        assert record.homfly_ref is not None
        assert None not in (record.sigma, record.chi, record.chi4)
        assert record.chi4 >= record.chi

    def test_csv_with_comments(self, tmp_path):
        path = tmp_path / "mini.csv"
        path.write_text(
            "# a comment\n" + HEADER
            + f'3_1,"{TREFOIL_PD}",,true,true,true,-1,-1,2,{TREFOIL_HOMFLY},1,test\n'
            + "\n"
            + "U2,U(2),,,,,,,,,2,\n"
        )
        records = load_corpus(path)
        assert [r.name for r in records] == ["3_1", "U2"]
        assert records[1].split_components == 2

    def test_json_corpus(self, tmp_path):
        path = tmp_path / "mini.json"
        path.write_text(json.dumps({"records": [
            {"name": "3_1", "pd": TREFOIL_PD, "chi": -1, "positive_diagram": True},
            {"name": "T2_4", "braid": "1 1 1 1", "split_components": 1},
        ]}))
        records = load_corpus(path)
        assert records[0].chi == -1
        assert records[1].diagram().component_count == 2

    def test_duplicate_names(self, tmp_path):
        path = tmp_path / "dup.json"
        path.write_text(json.dumps([{"name": "a", "pd": "U(1)"}, {"name": "a", "pd": "U(2)"}]))
        with pytest.raises(SchemaError, match="duplicate"):
            load_corpus(path)

    def test_bad_files(self, tmp_path):
        with pytest.raises(SchemaError):
            load_corpus(tmp_path / "missing.csv")
        other = tmp_path / "corpus.txt"
        other.write_text("name\n")
        with pytest.raises(SchemaError):
            load_corpus(other)
        broken = tmp_path / "broken.json"
        broken.write_text("{not json")
        with pytest.raises(SchemaError):
            load_corpus(broken)
        headerless = tmp_path / "headerless.csv"
        headerless.write_text("pd,braid\nU(1),\n")
        with pytest.raises(SchemaError):
            load_corpus(headerless)

    def test_validation_can_be_skipped(self, tmp_path):
        path = tmp_path / "wrong.json"
        path.write_text(json.dumps([{"name": "3_1", "pd": TREFOIL_PD, "alternating": False}]))
        with pytest.raises(CorpusInconsistency):
            load_corpus(path)
        assert load_corpus(path, validate=False)[0].alternating is False


# ─────────────────────────────────────────────────────────────────────────────
# Verification
# ─────────────────────────────────────────────────────────────────────────────

class TestVerifyRecord:
    def test_reference_mismatch_is_an_inconsistency(self):
        record = parse_record(_row(homfly_ref="v^2"))
        outcome = verify_record(record, SkeinEngine())
        assert outcome.status == "checked"
        assert outcome.inconsistencies
        assert "homfly_ref" in outcome.inconsistencies[0]

    def test_split_count_mismatch(self):
        record = parse_record({"name": "u", "pd": "U(2)", "split_components": "1"})
        outcome = verify_record(record, SkeinEngine())
        assert any("split_components" in m for m in outcome.inconsistencies)

    def test_cap_skips_the_record(self):
        outcome = verify_record(parse_record(_row()), SkeinEngine(cap=2))
        assert outcome.status == "skipped"
        assert outcome.report is None


class TestRunVerification:
    @pytest.mark.slow
    def test_bundled_corpus_has_no_violations(self, corpus):
        summary = run_verification(corpus)
        counts = summary.counts
        assert counts["checked"] == len(corpus)
        assert counts["violated"] == 0
        assert counts["errors"] == 0
        assert counts["inconsistencies"] == 0
        assert counts["equalities"] > 0 and counts["strict"] > 0
        assert summary.exit_code == 0
        assert not any(row.counterexample_candidate for row in summary.conjecture)

    @pytest.mark.slow
    def test_homogeneous_records_are_actually_checked(self, corpus):
        summary = run_verification(corpus)
        for outcome in summary.outcomes:
            verdicts = outcome.report.verdicts
            assert verdicts["mfw"].holds and verdicts["structure"].holds, outcome.name
            if outcome.report.graph.is_homogeneous:
                for check in ("cromwell_diagram", "theorem_main", "slice_cromwell"):
                    assert verdicts[check].holds, (outcome.name, check)
            if outcome.report.positive_diagram:
                assert verdicts["theorem_main"] is Verdict.EQUALITY, outcome.name

    @pytest.mark.slow
    def test_six_one_row(self, corpus):
        summary = run_verification(corpus)
        row = next(r for r in summary.conjecture if r.name == "6_1")
        assert row.h_slice_equality is True
        assert row.positive_diagram is False

    def test_outcomes_sorted_and_seed_independent(self, corpus_by_name):
        records = [corpus_by_name[n] for n in ("4_1", "Hopf+", "3_1", "U2", "6_1")]
        first = run_verification(records, seed=1, workers=2)
        second = run_verification(records, seed=7, workers=3)
        assert [o.name for o in first.outcomes] == ["3_1", "4_1", "6_1", "Hopf+", "U2"]
        assert [o.to_dict() for o in first.outcomes] == [o.to_dict() for o in second.outcomes]
        assert first.seed == 1

    def test_cap_overflow_is_skipped(self, corpus_by_name):
        summary = run_verification([corpus_by_name["3_1"], corpus_by_name["0_1"]], cap=2)
        assert summary.counts["skipped"] == 1
        assert summary.counts["checked"] == 1
        assert summary.exit_code == 0

    def test_inconsistency_sets_the_exit_code(self):
        record = parse_record(_row(homfly_ref="v^2"))
        summary = run_verification([record])
        assert summary.counts["inconsistencies"] == 1
        assert summary.exit_code == 1


class TestReports:
    @pytest.fixture
    def summary(self, corpus_by_name):
        return run_verification([corpus_by_name[n] for n in ("3_1", "6_1", "unlink2_braid")])

    def test_json(self, summary, tmp_path):
        data = json.loads(render_json(summary))
        assert data["summary"]["checked"] == 3
        assert [r["name"] for r in data["records"]] == ["3_1", "6_1", "unlink2_braid"]
        path = write_json_report(summary, tmp_path / "out.json")
        assert json.loads(path.read_text())["seed"] == summary.seed

    def test_markdown(self, summary, tmp_path):
        text = render_markdown(summary)
        assert text.startswith("# Verification report")
        assert "| 3_1 |" in text
        assert "## Equality cases" in text
        assert "counterexample" in text
        path = write_markdown_report(summary, tmp_path / "out.md")
        assert path.read_text() == text

    def test_record_to_dict(self):
        record = KnotRecord(name="x", pd="U(1)")
        assert record.to_dict()["name"] == "x"
        assert "_diagram" not in record.to_dict()
