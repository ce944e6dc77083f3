import json

import pytest

from bperm.enumeration import SizeCapExceededError
from bperm.harness import (
    CHECKS,
    CheckReport,
    CheckRow,
    UnknownCheckError,
    any_theorem_failed,
    report_from_json,
    report_to_json,
    run_all,
    run_check,
)


class TestRegistry:
    def test_expected_checks_registered(self):
        expected = {
            "thm-vexillary",
            "thm-boolean",
            "thm-free",
            "thm-smooth-bc",
            "thm-central-binomial",
            "thm-greene-counts",
            "thm-fib-like",
            "thm-binomial-sum",
            "prop-es-unsigned",
            "prop-es-signed",
            "lemma-symmetry",
            "cor-iota",
            "prop-gl-basis",
            "conj-grassmannian",
            "conj-smooth-count",
            "oq-gao-hanni",
            "oq-a115197",
            "oq-two-boolean",
        }
        assert expected == set(CHECKS)

    def test_ids_unique_and_caps_bounded(self):
        for check_id, check in CHECKS.items():
            assert check.id == check_id
            assert 0 < check.max_n <= 8

    def test_kinds(self):
        assert CHECKS["thm-free"].kind == "theorem"
        assert CHECKS["prop-es-signed"].kind == "theorem"
        assert CHECKS["lemma-symmetry"].kind == "theorem"
        assert CHECKS["cor-iota"].kind == "theorem"
        assert CHECKS["conj-grassmannian"].kind == "conjecture"
        assert CHECKS["oq-a115197"].kind == "conjecture"


class TestRunCheck:
    def test_central_binomial_rows(self):
        report = run_check("thm-central-binomial", 5)
        assert report.status == "pass"
        count_rows = [row for row in report.rows if "B=" not in row.expected]
        assert [(row.n, row.expected) for row in count_rows] == [
            (1, "2"),
            (2, "6"),
            (3, "20"),
            (4, "70"),
            (5, "252"),
        ]

    def test_vexillary_passes(self):
        report = run_check("thm-vexillary", 4)
        assert report.status == "pass"
        assert report.max_n == 4

    def test_gao_hanni_holds(self):
        report = run_check("oq-gao-hanni", 4)
        assert report.status == "conjecture-holds"
        assert [row.observed for row in report.rows] == ["2", "7", "33", "183"]

    def test_a115197_prefix(self):
        report = run_check("oq-a115197", 4)
        assert report.status == "conjecture-holds"
        assert [row.expected for row in report.rows] == ["2", "6", "22", "90"]

    def test_two_boolean_is_informational_counterexample(self):
        # The longest element of the rank-2 group: every reduced word uses
        # each generator exactly twice, yet the mirror word is a 4321 pattern.
        report = run_check("oq-two-boolean", 2)
        assert report.status == "conjecture-fails"
        assert any(row.expected != row.observed for row in report.rows)

    def test_unknown_check(self):
        with pytest.raises(UnknownCheckError):
            run_check("thm-nonexistent", 3)

    def test_size_cap(self):
        with pytest.raises(SizeCapExceededError):
            run_check("thm-vexillary", 9)

    def test_max_n_zero_is_vacuous_pass(self):
        report = run_check("thm-vexillary", 0)
        assert report.status == "pass"
        assert report.rows == ()

    def test_failing_status_requires_mismatching_row(self):
        for check_id in CHECKS:
            report = run_check(check_id, 2)
            mismatches = [row for row in report.rows if row.expected != row.observed]
            if report.status in ("fail", "conjecture-fails"):
                assert mismatches
            else:
                assert not mismatches

    def test_jobs_do_not_change_report(self):
        serial = run_check("thm-central-binomial", 4, jobs=1)
        parallel = run_check("thm-central-binomial", 4, jobs=2)
        assert serial.rows == parallel.rows
        assert serial.status == parallel.status


class TestRunAll:
    def test_runs_everything_in_id_order(self):
        reports = run_all(2)
        assert [r.check for r in reports] == sorted(CHECKS)
        assert all(r.max_n <= 2 for r in reports)

    def test_no_theorem_failures_at_desk_scale(self):
        reports = run_all(3)
        theorem_reports = [r for r in reports if CHECKS[r.check].kind == "theorem"]
        assert all(r.status == "pass" for r in theorem_reports)
        assert not any_theorem_failed(reports)

    def test_max_n_zero_vacuous(self):
        reports = run_all(0)
        assert all(r.status in ("pass", "conjecture-holds") for r in reports)
        assert all(r.rows == () for r in reports)

    def test_id_filter(self):
        reports = run_all(2, ids=["thm-free", "oq-a115197"])
        assert [r.check for r in reports] == ["oq-a115197", "thm-free"]

    def test_unknown_id_filter_selects_nothing(self):
        assert run_all(2, ids=["thm-unheard-of"]) == []


class TestReportSerialization:
    def test_json_round_trip(self):
        report = run_check("prop-es-signed", 4)
        assert report_from_json(report_to_json(report)) == report

    def test_json_schema(self):
        report = run_check("oq-a115197", 3)
        data = json.loads(report_to_json(report))
        assert set(data) == {"check", "status", "max_n", "rows", "millis"}
        assert data["check"] == "oq-a115197"
        assert isinstance(data["max_n"], int)
        assert isinstance(data["millis"], int)
        for row in data["rows"]:
            assert set(row) == {"n", "expected", "observed"}
            assert isinstance(row["n"], int)
            assert isinstance(row["expected"], str)
            assert isinstance(row["observed"], str)

    def test_counts_serialized_as_strings(self):
        report = run_check("thm-central-binomial", 3)
        data = report.to_json_dict()
        assert all(isinstance(row["expected"], str) for row in data["rows"])

    def test_manual_report_round_trip(self):
        report = CheckReport(
            check="demo",
            status="fail",
            max_n=2,
            rows=(CheckRow(1, "1", "2"),),
            millis=5,
        )
        assert CheckReport.from_json_dict(report.to_json_dict()) == report
        assert not report.ok()
