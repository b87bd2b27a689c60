from dataclasses import replace

import pytest

from coxeter_descent.core.coxeter_types import Family
from coxeter_descent.suites.base_suite import BaseSuite, SuiteError
from coxeter_descent.suites.classical import BaseChangesSuite, ClassicalProductsSuite
from coxeter_descent.suites.examples import ExampleB3Suite, ExampleRank2Suite, dihedral_split
from coxeter_descent.suites.maximal_subsets import ClassificationSuite, ExtraCasesSuite
from coxeter_descent.suites.no_native_table import NoNativeTableSuite
from coxeter_descent.suites.oracles import MinimalPolynomialSuite, SolomonOracleSuite
from coxeter_descent.utils.io_utils import load_json
from coxeter_descent.workflows.master_suite import SUITES, TARGETS, MasterSuite
from coxeter_descent.workflows.reproduction_controller import ReproductionController


def _assert_passed(report):
    assert report.passed, [c.to_json() for c in report.failures]
    assert report.checks


@pytest.mark.parametrize("m,k,l", [(3, 1, 1), (4, 1, 2), (5, 2, 1), (6, 2, 2), (11, 5, 1), (12, 5, 2)])
def test_dihedral_split(m, k, l):
    assert dihedral_split(m) == (k, l)


def test_no_native_table_suite(settings):
    report = NoNativeTableSuite(settings).run()
    _assert_passed(report)
    assert len(report.checks) == 11


def test_example_suites(settings):
    _assert_passed(ExampleB3Suite(settings).run())
    report = ExampleRank2Suite(settings, ms=(3, 5, 8)).run()
    _assert_passed(report)
    assert len(report.checks) == 9


def test_classical_products_suite(settings):
    suite = ClassicalProductsSuite(
        settings, ranges=((Family.A, 3), (Family.B, 3), (Family.D, 4)), counting_range=3, phi_range=5
    )
    _assert_passed(suite.run())


def test_base_changes_suite(settings):
    _assert_passed(BaseChangesSuite(settings, base_change_range=6, quotient_range=4).run())


def test_extra_cases_suite(settings):
    report = ExtraCasesSuite(settings).run()
    _assert_passed(report)
    # E6, E7 and E8 are beyond the witness search
    assert len(report.skipped) == 3


def test_classification_suite(settings):
    report = ClassificationSuite(settings, type_specs=("A3", "B3", "D4", "I2:5")).run()
    _assert_passed(report)
    assert len(report.checks) == 3 + 3 + 4 + 2


def test_classification_suite_records_skips(settings):
    report = ClassificationSuite(settings.with_overrides(enumeration_cap=10), type_specs=("H3",)).run()
    assert report.passed
    assert len(report.skipped) == 3


def test_oracle_suites(settings):
    _assert_passed(SolomonOracleSuite(settings, type_specs=("A2", "B3"), samples=3).run())
    _assert_passed(MinimalPolynomialSuite(settings, type_specs=("A2", "I2:5", "B3")).run())


class _Broken(BaseSuite):
    name = "broken"

    def collect(self) -> None:
        raise RuntimeError("boom")


class _Silent(BaseSuite):
    name = "silent"

    def collect(self) -> None:
        pass


def test_unexpected_errors_become_suite_errors(settings):
    with pytest.raises(SuiteError):
        _Broken(settings).run()
    with pytest.raises(SuiteError):
        _Silent(settings).run()


def test_debug_dump(settings):
    debug = replace(settings, debug=True)
    ExampleB3Suite(debug).run()
    data = load_json(debug.output_dir / "debug_example_b3.json")
    assert data["suite"] == "example_b3"
    assert all("duration" in c for c in data["checks"])


def test_report_text(settings):
    report = ExampleB3Suite(settings).run()
    lines = report.text_lines()
    assert lines[0] == report.summary_line()
    assert all(line.startswith("  [ok  ]") for line in lines[1:])


def test_master_suite_targets(settings):
    assert TARGETS[-1] == "all"
    assert set(SUITES) == {
        "table1",
        "example_rank2",
        "example_b3",
        "classical_products",
        "base_changes",
        "prop42",
        "main_theorem",
        "solomon_oracle",
        "minimal_polynomials",
    }
    reports = MasterSuite(settings, ["example_b3", "table1"]).run()
    assert [r.name for r in reports] == ["example_b3", "table1"]
    with pytest.raises(ValueError):
        MasterSuite(settings, ["nope"])


def test_reproduction_controller_writes_summary(settings, tmp_path):
    result = ReproductionController(settings, summary_dir=tmp_path / "summary").run("example_b3")
    assert result.success
    assert result.failed == 0
    assert result.summary_path == tmp_path / "summary" / "reproduce_example_b3.json"
    data = load_json(result.summary_path)
    assert data["target"] == "example_b3"
    assert data["passed"] is True
    assert result.text_lines()[-1].startswith("PASS example_b3")
    with pytest.raises(ValueError):
        ReproductionController(settings).run("nope")
