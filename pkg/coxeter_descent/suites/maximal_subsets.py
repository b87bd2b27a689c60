from __future__ import annotations

import time
from typing import Sequence

from coxeter_descent.algebra.classification import classify_all_maximal
from coxeter_descent.algebra.descent_algebra import DescentAlgebra
from coxeter_descent.algebra.no_native import EXTRA_CASES, NO_NATIVE_ROWS, commutation_witness, verify_extra_case
from coxeter_descent.core.coxeter_system import build_system
from coxeter_descent.suites.base_suite import BaseSuite
from coxeter_descent.utils.config import Settings

CLASSIFICATION_TYPES: tuple = (
    tuple(f"A{n}" for n in range(1, 6))
    + tuple(f"B{n}" for n in range(2, 5))
    + tuple(f"D{n}" for n in range(3, 6))
    + tuple(f"I2:{m}" for m in range(3, 11))
    + ("H3", "H4", "F4", "E6")
)

# witness search builds X_K for the commuting part K; skip groups above this order
WITNESS_ORDER_LIMIT = 20_000


class ExtraCasesSuite(BaseSuite):
    """
    Exceptional and non-left-connected cases without a native basis: the
    two hand-checked H3/F4 cases, and a commutation witness for each table
    row small enough to search.
    """

    name = "prop42"

    def collect(self) -> None:
        for case in EXTRA_CASES:
            started = time.perf_counter()
            result = verify_extra_case(case, self.enumeration_cap)
            self.check(
                f"{case.type_spec} s=s{case.s}: K^y ∩ J = {list(case.expected)} ⊄ K, supp(x_J x_K) != supp(x_K x_J)",
                {"K^y ∩ J": list(case.expected), "failures": []},
                {"K^y ∩ J": list(result.K_y_meet_J), "failures": list(result.failures)},
                passed=result.passed,
                started=started,
            )

        for row in NO_NATIVE_ROWS:
            system = build_system(row.type_spec, enumeration_cap=self.enumeration_cap)
            if system.group_order > WITNESS_ORDER_LIMIT:
                self.skip(f"witness search for {row.label}: |W| = {system.group_order}")
                continue
            started = time.perf_counter()
            witness = commutation_witness(DescentAlgebra(system), row.s)
            self.check(
                f"{row.label}: some t in J∖K and y in X_JK have t^y in K",
                True,
                witness is not None,
                started=started,
            )


class ClassificationSuite(BaseSuite):
    """Native-basis verdicts for every maximal J against the classification."""

    name = "main_theorem"

    def __init__(self, settings: Settings, type_specs: Sequence[str] = CLASSIFICATION_TYPES) -> None:
        super().__init__(settings)
        self.type_specs = tuple(type_specs)

    def collect(self) -> None:
        for spec in self.type_specs:
            system = build_system(spec, enumeration_cap=self.enumeration_cap)
            started = time.perf_counter()
            verdicts = classify_all_maximal(DescentAlgebra(system))
            for v in verdicts:
                if v.skipped:
                    self.skip(f"{system.label} s={v.s}: {v.skipped}")
                    continue
                self.check(
                    f"{system.label} s=s{v.s}, J={v.J}: {v.expected.reason}",
                    {"native": v.expected.native, "integral": v.expected.integral},
                    {"native": v.native, "integral": v.integral},
                    started=started,
                )
                started = time.perf_counter()
