"""
Tests for the verification suites and scans
"""
import pytest

from src.config import config_manager
from src.errors import UsageError
from src import suites
from src.suites import (
    SUITES,
    Case,
    CaseStatus,
    SuiteBounds,
    SuiteKind,
    evaluate_case,
    get_suite,
    run_suite,
)


class TestSuiteRegistry:
    """Lookup of suites by name and kind"""

    def test_get_suite(self):
        """Test lookup with and without a kind filter"""
        assert get_suite("theorem-3.1").kind is SuiteKind.VERIFY
        assert get_suite("conjecture-4.3", SuiteKind.SCAN).kind is SuiteKind.SCAN

    def test_unknown_or_wrong_kind(self):
        """Test that lookups outside the registry raise a UsageError"""
        with pytest.raises(UsageError):
            get_suite("theorem-9.9")
        with pytest.raises(UsageError):
            get_suite("conjecture-4.3", SuiteKind.VERIFY)

    def test_every_check_is_registered(self, small_bounds):
        """Test that every generated case names a known check"""
        for suite in SUITES.values():
            for case in suite.cases(small_bounds):
                assert case.check in suites.CHECKS

    def test_bounds_from_config(self):
        """Test that defaults come from the suite section and overrides win"""
        config_manager.update_config("suite", max_parts=2)
        bounds = SuiteBounds.from_config(max_weight=3, max_area=None)
        assert bounds.max_weight == 3
        assert bounds.max_parts == 2
        assert bounds.max_area == 8


class TestEvaluateCase:
    """Single-case evaluation"""

    def test_pass(self):
        """Test a fermionic P case"""
        result = evaluate_case(Case("p-fermionic", "lam=2,1 mu=1,2", ((2, 1), (1, 2))))
        assert result.status is CaseStatus.PASS
        assert result.case == "lam=2,1 mu=1,2"

    def test_fail_and_report(self, monkeypatch):
        """Test that a failed check is FAIL in a verify suite and REPORT in a scan"""
        monkeypatch.setitem(suites.CHECKS, "p-fermionic", lambda lam, mu: (False, "forced"))
        case = Case("p-fermionic", "forced", ((1,), (1,)))
        assert evaluate_case(case).status is CaseStatus.FAIL
        assert evaluate_case(case, SuiteKind.SCAN).status is CaseStatus.REPORT
        assert evaluate_case(case).detail == "forced"


class TestRunSuite:
    """Whole-suite runs under small bounds"""

    @pytest.mark.asyncio
    @pytest.mark.parametrize("name", [
        "theorem-3.1",
        "theorem-3.4",
        "prop-1.6",
        "prop-1.8",
        "prop-2.7",
        "prop-2.9",
        "thm-2.2",
        "thm-2.4",
        "thm-2.5",
        "cor-4.2",
        "eq-0.6",
        "mahonian",
    ])
    async def test_verify_suites_pass(self, small_bounds, name):
        """Test that each identity holds on small inputs"""
        report = await run_suite(name, small_bounds)
        assert report.results
        assert report.failed == 0, [r.detail for r in report.results if r.status is CaseStatus.FAIL]
        assert report.ok

    @pytest.mark.asyncio
    async def test_rc_suite_includes_worked_example(self, small_bounds):
        """Test the RC suite and its fixed example case"""
        report = await run_suite("eq-7.9", small_bounds)
        assert report.ok
        assert report.results[0].case.startswith("lam=4,4,3,3,2")

    @pytest.mark.asyncio
    @pytest.mark.parametrize("name", ["conjecture-4.3", "rc-order"])
    async def test_scans_never_fail(self, small_bounds, name):
        """Test that scans only pass or report"""
        report = await run_suite(name, small_bounds, kind=SuiteKind.SCAN)
        assert report.failed == 0
        assert report.ok
        assert "reported" in report.to_json()

    @pytest.mark.asyncio
    async def test_failure_is_reported(self, small_bounds, monkeypatch):
        """Test that one failing check makes the suite fail"""
        monkeypatch.setitem(suites.CHECKS, "p-fermionic", lambda lam, mu: (lam != (2, 1), "forced"))
        report = await run_suite("theorem-3.1", small_bounds)
        assert not report.ok
        assert report.failed == sum(1 for r in report.results if r.case.startswith("lam=2,1 "))

    @pytest.mark.asyncio
    async def test_worker_count_does_not_change_report(self, small_bounds):
        """Test that a process pool gives the same ordered results"""
        serial = await run_suite("theorem-3.4", small_bounds, jobs=1)
        parallel = await run_suite("theorem-3.4", small_bounds, jobs=2)
        assert serial.to_json() == parallel.to_json()

    @pytest.mark.asyncio
    async def test_report_document(self, small_bounds):
        """Test the JSON layout of a verify report"""
        report = await run_suite("thm-2.2", small_bounds)
        document = report.to_json()
        assert set(document) == {"suite", "kind", "cases", "passed", "failed"}
        assert document["kind"] == "verify"
        assert document["passed"] == len(document["cases"])
        assert set(document["cases"][0]) == {"case", "status", "detail"}
