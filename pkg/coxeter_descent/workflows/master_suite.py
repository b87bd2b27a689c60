from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Type

from coxeter_descent.suites.base_suite import BaseSuite, SuiteReport
from coxeter_descent.suites.classical import BaseChangesSuite, ClassicalProductsSuite
from coxeter_descent.suites.examples import ExampleB3Suite, ExampleRank2Suite
from coxeter_descent.suites.oracles import MinimalPolynomialSuite, SolomonOracleSuite
from coxeter_descent.suites.no_native_table import NoNativeTableSuite
from coxeter_descent.suites.maximal_subsets import ClassificationSuite, ExtraCasesSuite
from coxeter_descent.utils.config import Settings
from coxeter_descent.utils.io_utils import save_json
from coxeter_descent.utils.logging_utils import setup_logger

SUITES: Dict[str, Type[BaseSuite]] = {
    "table1": NoNativeTableSuite,
    "example_rank2": ExampleRank2Suite,
    "example_b3": ExampleB3Suite,
    "classical_products": ClassicalProductsSuite,
    "base_changes": BaseChangesSuite,
    "prop42": ExtraCasesSuite,
    "main_theorem": ClassificationSuite,
    "solomon_oracle": SolomonOracleSuite,
    "minimal_polynomials": MinimalPolynomialSuite,
}

ALL = "all"
TARGETS: List[str] = list(SUITES) + [ALL]


class MasterSuite:
    """Runs reproduction suites in a fixed order and collects their reports."""

    def __init__(self, settings: Settings, targets: Optional[Sequence[str]] = None) -> None:
        self.settings = settings
        self.targets = list(SUITES) if targets is None else list(targets)
        unknown = [t for t in self.targets if t not in SUITES]
        if unknown:
            raise ValueError(f"unknown reproduction target(s) {unknown}; choose from {TARGETS}")
        self.logger = setup_logger("workflow.master_suite")

    def _debug_dump(self, report: SuiteReport) -> None:
        if not self.settings.debug:
            return
        path = self.settings.output_dir / f"debug_master_{report.name}.json"
        save_json(report.to_json(include_timing=True), path)
        self.logger.debug("[debug] %s: %d checks -> %s", report.name, len(report.checks), path)

    def run(self) -> List[SuiteReport]:
        self.logger.info("MasterSuite starting %d target(s): %s", len(self.targets), ", ".join(self.targets))
        reports: List[SuiteReport] = []
        for target in self.targets:
            suite = SUITES[target](self.settings)
            report = suite.run()
            self._debug_dump(report)
            reports.append(report)
            if not report.passed:
                self.logger.warning("%s reported %d failed check(s)", target, len(report.failures))
        passed = sum(1 for r in reports if r.passed)
        self.logger.info("MasterSuite finished: %d/%d suites passed", passed, len(reports))
        return reports
