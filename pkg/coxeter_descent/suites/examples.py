from __future__ import annotations

import time
from fractions import Fraction
from typing import List, Sequence

from coxeter_descent.algebra.algebra_element import format_rational
from coxeter_descent.algebra.descent_algebra import DescentAlgebra
from coxeter_descent.algebra.subalgebra import detect_native_basis
from coxeter_descent.core.coxeter_system import build_system
from coxeter_descent.core.subsets import EMPTY, format_subset, mask_of
from coxeter_descent.suites.base_suite import BaseSuite
from coxeter_descent.utils.config import Settings

RANK2_RANGE = tuple(range(3, 13))


def _row(values: Sequence[Fraction]) -> List[str]:
    return [format_rational(Fraction(v)) for v in values]


def dihedral_split(m: int):
    """m = 2k + l with k >= 1 and l in (1, 2)."""
    k = (m - 1) // 2
    return k, m - 2 * k


class ExampleRank2Suite(BaseSuite):
    """I2(m), s = s1, J = {s2}: x_J^2 = l x_J + k x_∅, integral iff k = 1."""

    name = "example_rank2"

    def __init__(self, settings: Settings, ms: Sequence[int] = RANK2_RANGE) -> None:
        super().__init__(settings)
        self.ms = tuple(ms)

    def collect(self) -> None:
        for m in self.ms:
            k, l = dihedral_split(m)
            system = build_system(f"I2:{m}", enumeration_cap=self.enumeration_cap)
            algebra = DescentAlgebra(system)
            J = mask_of([2], 2)
            label = f"I2:{m} (k={k}, l={l})"

            started = time.perf_counter()
            square = algebra.power(algebra.x(J), 2)
            self.check(
                f"{label}: x_J^2 = {l} x_J + {k} x_∅",
                algebra.x(J, l) + algebra.x(EMPTY, k),
                square,
                started=started,
            )

            started = time.perf_counter()
            report = detect_native_basis(algebra, J)
            x_empty = report.change_of_basis[0] if report.has_native_basis else []
            self.check(
                f"{label}: native basis with x_∅ = -(l/k) x_J + (1/k) x_J^2",
                {"native": True, "x_∅": _row([0, Fraction(-l, k), Fraction(1, k)])},
                {"native": report.has_native_basis, "x_∅": _row(x_empty)},
                started=started,
            )
            self.check(f"{label}: integral iff k = 1", k == 1, report.all_integer)


B3_J = (1, 3)
B3_K = (1,)


class ExampleB3Suite(BaseSuite):
    """B3, s = s2, J = {s1, s3}, K = {s1}."""

    name = "example_b3"

    def collect(self) -> None:
        system = build_system("B3", enumeration_cap=self.enumeration_cap)
        algebra = DescentAlgebra(system)
        J = mask_of(B3_J, 3)
        K = mask_of(B3_K, 3)
        x_j = algebra.x(J)

        started = time.perf_counter()
        self.check(
            "B3: x_J^2 = 2 x_J + x_K + 2 x_∅",
            algebra.x(J, 2) + algebra.x(K) + algebra.x(EMPTY, 2),
            algebra.power(x_j, 2),
            started=started,
        )
        started = time.perf_counter()
        self.check(
            "B3: x_J^3 = 4 x_J + 6 x_K + 32 x_∅",
            algebra.x(J, 4) + algebra.x(K, 6) + algebra.x(EMPTY, 32),
            algebra.power(x_j, 3),
            started=started,
        )

        started = time.perf_counter()
        report = detect_native_basis(algebra, J)
        self.check(
            "B3: native basis {x_∅, x_K, x_J, x_S}",
            ["-", "1", "1,3", "1,2,3"],
            [format_subset(L) for L in report.native_basis],
            started=started,
        )
        rows = dict(zip(report.native_basis, report.change_of_basis))
        self.check(
            "B3: x_K = -14/5 x_J + 8/5 x_J^2 - 1/10 x_J^3",
            _row([0, Fraction(-14, 5), Fraction(8, 5), Fraction(-1, 10)]),
            _row(rows.get(K, [])),
        )
        self.check(
            "B3: x_∅ = 2/5 x_J - 3/10 x_J^2 + 1/20 x_J^3",
            _row([0, Fraction(2, 5), Fraction(-3, 10), Fraction(1, 20)]),
            _row(rows.get(EMPTY, [])),
        )
        self.check("B3: not all native elements are integer polynomials", False, report.all_integer)
