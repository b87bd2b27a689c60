from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

from coxeter_descent.suites.base_suite import SCHEMA_VERSION, SuiteReport
from coxeter_descent.utils.config import Settings, load_settings
from coxeter_descent.utils.io_utils import ensure_directories, save_json
from coxeter_descent.utils.logging_utils import setup_logger
from coxeter_descent.workflows.master_suite import ALL, SUITES, MasterSuite


@dataclass
class ReproductionResult:
    target: str
    reports: List[SuiteReport] = field(default_factory=list)
    summary_path: Optional[Path] = None

    @property
    def success(self) -> bool:
        return all(r.passed for r in self.reports)

    @property
    def total(self) -> int:
        return sum(len(r.checks) for r in self.reports)

    @property
    def failed(self) -> int:
        return sum(len(r.failures) for r in self.reports)

    def to_json(self, include_timing: bool = False) -> Dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "target": self.target,
            "passed": self.success,
            "total": self.total,
            "failed": self.failed,
            "suites": [r.to_json(include_timing) for r in self.reports],
        }

    def text_lines(self) -> List[str]:
        lines: List[str] = []
        for r in self.reports:
            lines.extend(r.text_lines())
        status = "PASS" if self.success else "FAIL"
        lines.append(f"{status} {self.target}: {self.total - self.failed}/{self.total} checks passed")
        return lines


class ReproductionController:
    def __init__(self, settings: Optional[Settings] = None, summary_dir: Optional[Path] = None) -> None:
        self.settings = settings if settings is not None else load_settings()
        self.summary_dir = summary_dir
        self.logger = setup_logger("workflow.controller")

    def run(self, target: str) -> ReproductionResult:
        self.logger.info("Initializing reproduction of %s", target)
        if target != ALL and target not in SUITES:
            raise ValueError(f"unknown reproduction target {target!r}; choose from {list(SUITES) + [ALL]}")

        master = MasterSuite(self.settings, None if target == ALL else [target])
        result = ReproductionResult(target=target, reports=master.run())

        summary_dir = self.summary_dir
        if summary_dir is None and self.settings.debug:
            summary_dir = self.settings.output_dir
        if summary_dir is not None:
            ensure_directories(summary_dir)
            result.summary_path = summary_dir / f"reproduce_{target}.json"
            save_json(result.to_json(include_timing=True), result.summary_path)
            self.logger.info("Wrote summary to %s", result.summary_path)

        if result.success:
            self.logger.info("Reproduction of %s completed: %d checks passed", target, result.total)
        else:
            self.logger.error("Reproduction of %s: %d/%d checks failed", target, result.failed, result.total)
        return result
