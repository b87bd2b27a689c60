from __future__ import annotations

import time
from typing import Dict, List, Sequence, Tuple

from coxeter_descent.algebra.descent_algebra import DescentAlgebra
from coxeter_descent.classical.chain_formulas import (
    TO_NATIVES,
    TO_POWERS,
    base_change,
    base_changes_are_inverse,
    chain_as_polynomial,
    chain_element,
    chain_indices,
    closed_form_product,
    intersection_counts,
    phi_failures,
    recurrence_product,
    solomon_chain_product,
)
from coxeter_descent.classical.quotient_models import QuotientModel
from coxeter_descent.core.coxeter_system import build_system
from coxeter_descent.core.coxeter_types import Family
from coxeter_descent.suites.base_suite import BaseSuite
from coxeter_descent.utils.config import Settings

# (family, largest rank) checked against Solomon's rule
BRUTE_FORCE_RANGES: Tuple[Tuple[Family, int], ...] = ((Family.A, 6), (Family.B, 5), (Family.D, 5))
COUNTING_RANGE = 5
PHI_RANGE = 8
QUOTIENT_RANGE = 8
BASE_CHANGE_RANGE = 12


def _ranks(family: Family, top: int) -> range:
    return range({Family.A: 1, Family.B: 2, Family.D: 3}[family], top + 1)


def _fmt(vector) -> str:
    return " + ".join(f"{c}*x_{j}" for j, c in vector.items()) or "0"


class ClassicalProductsSuite(BaseSuite):
    """
    Closed-form chain products, recurrences and chain polynomials for
    A, B and D, each compared with Solomon's rule; φ: D_n -> A_(n-1) on
    closed forms alone.
    """

    name = "classical_products"

    def __init__(
        self,
        settings: Settings,
        ranges: Sequence[Tuple[Family, int]] = BRUTE_FORCE_RANGES,
        counting_range: int = COUNTING_RANGE,
        phi_range: int = PHI_RANGE,
    ) -> None:
        super().__init__(settings)
        self.ranges = tuple(ranges)
        self.counting_range = counting_range
        self.phi_range = phi_range

    def collect(self) -> None:
        for family, top in self.ranges:
            for n in _ranks(family, top):
                label = f"{family.value}{n}"
                algebra = DescentAlgebra(build_system(label, enumeration_cap=self.enumeration_cap))
                self._closed_forms(algebra, family, n, label)
                self._recurrences(algebra, family, n, label)
                self._polynomials(algebra, family, n, label)
                if family is Family.A and n <= self.counting_range:
                    self._counting(algebra, n, label)
        for n in range(3, self.phi_range + 1):
            started = time.perf_counter()
            self.check(f"phi D{n} -> A{n - 1} respects products", [], phi_failures(n), started=started)

    def _closed_forms(self, algebra: DescentAlgebra, family: Family, n: int, label: str) -> None:
        started = time.perf_counter()
        bad: List[Dict[str, str]] = []
        for j in chain_indices(family, n):
            for k in chain_indices(family, n):
                got = solomon_chain_product(algebra, family, j, k)
                expected = closed_form_product(family, n, j, k)
                if got != expected:
                    bad.append({"j,k": f"{j},{k}", "solomon": _fmt(got), "closed_form": _fmt(expected)})
        self.check(f"{label}: closed-form chain products equal Solomon's rule", [], bad, started=started)

    def _recurrences(self, algebra: DescentAlgebra, family: Family, n: int, label: str) -> None:
        started = time.perf_counter()
        bad: List[Dict[str, str]] = []
        top = n - 1 if family is Family.D else n
        for k in range(top + 1):
            expected = recurrence_product(family, n, k)
            got = solomon_chain_product(algebra, family, n - 1, n - k)
            if got != expected:
                bad.append({"k": str(k), "solomon": _fmt(got), "recurrence": _fmt(expected)})
        self.check(f"{label}: x_(n-1) x_(n-k) recurrence", [], bad, started=started)

    def _polynomials(self, algebra: DescentAlgebra, family: Family, n: int, label: str) -> None:
        started = time.perf_counter()
        x_top = chain_element(algebra, family, {n - 1: 1})
        bad: List[str] = []
        top = n - 1 if family is Family.D else n
        for k in range(top + 1):
            p = chain_as_polynomial(family, n, k)
            value = algebra.evaluate_polynomial(list(p.coefficients), x_top)
            if value != chain_element(algebra, family, {n - k: 1}):
                bad.append(f"k={k}: p(x_(n-1)) = {value}")
        self.check(f"{label}: x_(n-k) is an integral polynomial in x_(n-1)", [], bad, started=started)

    def _counting(self, algebra: DescentAlgebra, n: int, label: str) -> None:
        started = time.perf_counter()
        bad: List[str] = []
        for j in chain_indices(Family.A, n):
            for k in chain_indices(Family.A, n):
                got = intersection_counts(algebra, Family.A, j, k)
                if got != closed_form_product(Family.A, n, j, k):
                    bad.append(f"{j},{k}: {_fmt(got)}")
        self.check(f"{label}: stabilizer counts over X_jk match the closed form", [], bad, started=started)


class BaseChangesSuite(BaseSuite):
    """Stirling base changes between natives and powers of x_(n-1); quotient-ring models."""

    name = "base_changes"

    def __init__(
        self,
        settings: Settings,
        base_change_range: int = BASE_CHANGE_RANGE,
        quotient_range: int = QUOTIENT_RANGE,
    ) -> None:
        super().__init__(settings)
        self.base_change_range = base_change_range
        self.quotient_range = quotient_range

    def collect(self) -> None:
        # x_0 = x_1^2 - x_1 in A2, x_0 = x_1^2 - 2 x_1 in B2
        self.check("A2: x_0 in powers of x_1", [0, -1, 1], base_change(Family.A, 2, TO_POWERS)[2])
        self.check("B2: x_0 in powers of x_1", [0, -2, 1], base_change(Family.B, 2, TO_POWERS)[2])
        self.check("B2: x_1^1 = x_1", [0, 1, 0], base_change(Family.B, 2, TO_NATIVES)[1])

        for family in (Family.A, Family.B, Family.D):
            for n in _ranks(family, self.base_change_range):
                self.timed_check(
                    f"{family.value}{n}: base change matrices are mutually inverse",
                    True,
                    lambda family=family, n=n: base_changes_are_inverse(family, n),
                )
            for n in _ranks(family, self.quotient_range):
                self.timed_check(
                    f"{family.value}{n}: quotient ring reproduces the chain products",
                    {},
                    lambda family=family, n=n: QuotientModel(family, n).mismatches(symbolic=True),
                )
