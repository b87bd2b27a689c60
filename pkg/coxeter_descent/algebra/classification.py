from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from coxeter_descent.algebra.descent_algebra import DescentAlgebra
from coxeter_descent.algebra.no_native import Witness, commutation_witness, maximal_subset
from coxeter_descent.algebra.subalgebra import SubalgebraReport, detect_native_basis
from coxeter_descent.core.coxeter_types import CoxeterType, Family
from coxeter_descent.core.errors import ClassificationMismatch, EnumerationCapError
from coxeter_descent.core.subsets import format_subset
from coxeter_descent.utils.logging_utils import setup_logger

logger = setup_logger("algebra.classification")


@dataclass(frozen=True)
class Expectation:
    native: bool
    integral: bool
    reason: str


def expected_verdict(ctype: CoxeterType, s: int) -> Expectation:
    """
    Whether Q[x_J], J = S∖{s}, has a native basis and whether it is integral.

    A maximal J is maximally left-connected when a diagram isomorphism carries
    it onto {s_1..s_(n-1)}: the flip of A_n, A_3 = D_3, and the triality of D_4.
    """
    n = ctype.rank
    family = ctype.family

    if family is Family.A and n == 1:
        return Expectation(True, True, "A1: J = ∅ is left-connected")
    if n == 2:
        m = ctype.dihedral_m if family is Family.I2 else {Family.A: 3, Family.B: 4}[family]
        integral = m in (3, 4)
        return Expectation(
            True,
            integral,
            f"rank 2, m = {m}: native basis; integral iff m in (3, 4)",
        )

    if family is Family.A:
        left_connected = s in (1, n) or (n == 3 and s == 2)
        if left_connected:
            return Expectation(True, True, "A: J is maximally left-connected up to diagram symmetry")
        return Expectation(False, False, "A: J is not left-connected")

    if family is Family.B:
        if s == n:
            return Expectation(True, True, "B: J = {s1..s(n-1)} is left-connected")
        if n == 3 and s == 2:
            return Expectation(True, False, "B3 with W_J of type B1 x A1: native, not integral")
        return Expectation(False, False, "B: J is not left-connected")

    if family is Family.D:
        if n == 3:
            return Expectation(True, True, "D3 = A3: every maximal J is left-connected up to symmetry")
        if n == 4 and s in (1, 2, 4):
            return Expectation(True, True, "D4: J is left-connected up to triality")
        if s == n:
            return Expectation(True, True, "D: J = {s1..s(n-1)} is left-connected")
        return Expectation(False, False, "D: J is not left-connected")

    return Expectation(False, False, f"{ctype.label}: exceptional type of rank >= 3 has no native basis")


@dataclass
class Verdict:
    s: int
    J: str
    native: Optional[bool]
    integral: Optional[bool]
    expected: Expectation
    dim: Optional[int] = None
    witness: Optional[Witness] = None
    skipped: Optional[str] = None
    report: Optional[SubalgebraReport] = field(default=None, repr=False)

    @property
    def matches(self) -> bool:
        if self.skipped:
            return True
        return self.native == self.expected.native and self.integral == self.expected.integral

    def to_json(self) -> Dict[str, object]:
        return {
            "s": self.s,
            "J": self.J,
            "dim": self.dim,
            "native": self.native,
            "integral": self.integral,
            "expected_native": self.expected.native,
            "expected_integral": self.expected.integral,
            "reason": self.expected.reason,
            "witness": None if self.witness is None else self.witness.to_json(),
            "skipped": self.skipped,
            "matches": self.matches,
        }


def classify_maximal(algebra: DescentAlgebra, s: int) -> Verdict:
    system = algebra.system
    J = maximal_subset(system, s)
    expected = expected_verdict(system.ctype, s)
    try:
        report = detect_native_basis(algebra, J)
    except EnumerationCapError as e:
        logger.warning("%s s=%d skipped: %s", system.label, s, e)
        return Verdict(s=s, J=format_subset(J), native=None, integral=None, expected=expected, skipped=str(e))

    witness = None
    if not report.has_native_basis:
        witness = commutation_witness(algebra, s)

    return Verdict(
        s=s,
        J=format_subset(J),
        native=report.has_native_basis,
        integral=report.all_integer,
        expected=expected,
        dim=report.dim,
        witness=witness,
        report=report,
    )


def classify_all_maximal(algebra: DescentAlgebra) -> List[Verdict]:
    system = algebra.system
    verdicts = [classify_maximal(algebra, s) for s in range(1, system.rank + 1)]
    labels = [system.label] + system.ctype.alternate_labels()
    for v in verdicts:
        if v.skipped:
            continue
        if v.matches:
            logger.debug("%s s=%d: native=%s integral=%s", "/".join(labels), v.s, v.native, v.integral)
        else:
            logger.error(
                "%s s=%d: got native=%s integral=%s, expected %s",
                "/".join(labels),
                v.s,
                v.native,
                v.integral,
                v.expected,
            )
    return verdicts


def assert_matches_classification(label: str, verdicts: List[Verdict]) -> None:
    bad: List[Tuple[int, Verdict]] = [(v.s, v) for v in verdicts if not v.matches]
    if bad:
        details = ", ".join(
            f"s{s}: native={v.native} integral={v.integral} expected native={v.expected.native} "
            f"integral={v.expected.integral}"
            for s, v in bad
        )
        raise ClassificationMismatch(f"{label}: {details}")
