from __future__ import annotations

import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from coxeter_descent.core.errors import CoxeterError
from coxeter_descent.utils.config import Settings
from coxeter_descent.utils.io_utils import save_json, to_serializable
from coxeter_descent.utils.logging_utils import setup_logger

SCHEMA_VERSION = "1"


class SuiteError(Exception):
    pass


@dataclass
class Check:
    anchor: str
    expected: Any
    actual: Any
    passed: bool
    duration: float = 0.0

    def to_json(self, include_timing: bool = False) -> Dict[str, Any]:
        out = {
            "anchor": self.anchor,
            "expected": to_serializable(self.expected),
            "actual": to_serializable(self.actual),
            "passed": self.passed,
        }
        if include_timing:
            out["duration"] = round(self.duration, 4)
        return out


@dataclass
class SuiteReport:
    name: str
    checks: List[Check] = field(default_factory=list)
    skipped: List[str] = field(default_factory=list)
    duration: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.passed]

    def summary_line(self) -> str:
        return f"{self.name}: {len(self.checks) - len(self.failures)}/{len(self.checks)} checks passed"

    def to_json(self, include_timing: bool = False) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "schema": SCHEMA_VERSION,
            "suite": self.name,
            "passed": self.passed,
            "total": len(self.checks),
            "failed": len(self.failures),
            "checks": [c.to_json(include_timing) for c in self.checks],
            "skipped": list(self.skipped),
        }
        if include_timing:
            out["duration"] = round(self.duration, 4)
        return out

    def text_lines(self) -> List[str]:
        lines = [self.summary_line()]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            lines.append(f"  [{mark}] {c.anchor}")
            if not c.passed:
                lines.append(f"         expected: {to_serializable(c.expected)}")
                lines.append(f"         actual:   {to_serializable(c.actual)}")
        for s in self.skipped:
            lines.append(f"  [skip] {s}")
        return lines


class BaseSuite(ABC):
    """
    Base class for reproduction suites providing:

    - Logging under suite.<name>
    - Timed execution with validation
    - Check bookkeeping
    - Optional JSON debug dumps
    """

    name: str = "suite"

    def __init__(self, settings: Settings) -> None:
        self.settings = settings
        self.enumeration_cap = settings.enumeration_cap
        self.logger = setup_logger(f"suite.{self.name}")
        self._checks: List[Check] = []
        self._skipped: List[str] = []

    # --------------------------------------------------
    # ABSTRACT METHODS
    # --------------------------------------------------

    @abstractmethod
    def collect(self) -> None:
        """Runs the computations, recording results with `check`."""

    def validate(self, report: SuiteReport) -> None:
        if not report.checks and not report.skipped:
            raise ValueError(f"{self.name} produced no checks")

    # --------------------------------------------------
    # CHECK BOOKKEEPING
    # --------------------------------------------------

    def check(
        self,
        anchor: str,
        expected: Any,
        actual: Any,
        passed: Optional[bool] = None,
        started: Optional[float] = None,
    ) -> Check:
        ok = expected == actual if passed is None else passed
        duration = time.perf_counter() - started if started is not None else 0.0
        record = Check(anchor=anchor, expected=expected, actual=actual, passed=bool(ok), duration=duration)
        self._checks.append(record)
        if ok:
            self.logger.debug("%s passed", anchor)
        else:
            self.logger.error("%s failed: expected %s, got %s", anchor, expected, actual)
        return record

    def timed_check(self, anchor: str, expected: Any, compute: Callable[[], Any]) -> Check:
        started = time.perf_counter()
        return self.check(anchor, expected, compute(), started=started)

    def skip(self, reason: str) -> None:
        self.logger.warning("%s: skipped %s", self.name, reason)
        self._skipped.append(reason)

    # --------------------------------------------------
    # TIMED EXECUTION
    # --------------------------------------------------

    def run(self) -> SuiteReport:
        self._checks = []
        self._skipped = []
        self.logger.info("Starting %s", self.name)
        start_time = time.perf_counter()
        try:
            self.collect()
            report = SuiteReport(
                name=self.name,
                checks=list(self._checks),
                skipped=list(self._skipped),
                duration=time.perf_counter() - start_time,
            )
            self.validate(report)
        except CoxeterError:
            self.logger.exception("Error during %s", self.name)
            raise
        except Exception as e:
            self.logger.exception("Error during %s: %s", self.name, e)
            raise SuiteError(f"{self.name} failed") from e

        self.logger.info("Completed %s in %.2fs (%s)", self.name, report.duration, report.summary_line())
        if self.settings.debug:
            self._save_json(report, f"debug_{self.name}.json")
        return report

    # --------------------------------------------------
    # JSON OUTPUT
    # --------------------------------------------------

    def _save_json(self, report: SuiteReport, filename: str) -> Path:
        path = self.settings.output_dir / filename
        save_json(report.to_json(include_timing=True), path)
        self.logger.info("Wrote JSON output to %s", path)
        return path
