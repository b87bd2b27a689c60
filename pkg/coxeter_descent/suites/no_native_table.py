from __future__ import annotations

import time

from coxeter_descent.algebra.no_native import NO_NATIVE_ROWS, verify_row
from coxeter_descent.suites.base_suite import BaseSuite, SuiteReport


class NoNativeTableSuite(BaseSuite):
    """
    Rows of the no-native-basis table: for J = S∖{s} and K = J^s ∩ J, the
    listed y lies in X_JK and carries t in J∖K into K. Descents and
    conjugation only, so E7 and E8 are checked without enumerating W.
    """

    name = "table1"

    def collect(self) -> None:
        for row in NO_NATIVE_ROWS:
            started = time.perf_counter()
            result = verify_row(row, self.enumeration_cap)
            expected = {
                "K": list(row.K),
                "y in X_JK": True,
                "t in J∖K": True,
                "t^y": row.t_image,
            }
            actual = {
                "K": list(row.K) if result.K_matches else "mismatch",
                "y in X_JK": result.y_in_double_transversal,
                "t in J∖K": result.t_outside_K,
                "t^y": result.t_image,
            }
            self.check(
                f"no-native table {row.label}: t=s{row.t}, y={row.y_formula()} = {result.y_word or 'e'}",
                expected,
                actual,
                passed=result.passed,
                started=started,
            )

    def validate(self, report: SuiteReport) -> None:
        super().validate(report)
        if len(report.checks) != len(NO_NATIVE_ROWS):
            raise ValueError(f"expected {len(NO_NATIVE_ROWS)} table rows, got {len(report.checks)}")
