from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from coxeter_descent.algebra.descent_algebra import DescentAlgebra
from coxeter_descent.core.coxeter_system import CoxeterSystem, GroupElement, build_system, format_word
from coxeter_descent.core.subsets import (
    SubsetMask,
    bit_indices,
    complement,
    format_subset,
    format_subset_braces,
    is_subset,
    mask_of,
    members,
)
from coxeter_descent.utils.logging_utils import setup_logger

logger = setup_logger("algebra.no_native")


@dataclass(frozen=True)
class Witness:
    """t in J∖K and y in X_JK with t^y = y^-1 t y in K."""

    s: int
    J: SubsetMask
    K: SubsetMask
    t: int
    y: GroupElement
    t_image: int

    def to_json(self) -> Dict[str, object]:
        return {
            "s": self.s,
            "J": members(self.J),
            "K": members(self.K),
            "t": self.t,
            "y": format_word(self.y.word()),
            "t^y": self.t_image,
        }


def maximal_subset(system: CoxeterSystem, s: int) -> SubsetMask:
    system.generator(s)
    return complement(SubsetMask(1 << (s - 1)), system.rank)


def commuting_part(system: CoxeterSystem, s: int) -> SubsetMask:
    """K = J^s ∩ J for J = S∖{s}: the generators commuting with s."""
    out = 0
    for i in range(1, system.rank + 1):
        if i != s and system.coxeter_matrix[s - 1][i - 1] == 2:
            out |= 1 << (i - 1)
    return SubsetMask(out)


def in_double_transversal(system: CoxeterSystem, y: GroupElement, J: int, K: int) -> bool:
    """y in X_JK, tested by descents only: left ascents on J, right ascents on K."""
    return all(system.has_left_ascent(y, i + 1) for i in bit_indices(J)) and all(
        system.has_right_ascent(y, i + 1) for i in bit_indices(K)
    )


def commutation_witness(algebra: DescentAlgebra, s: int) -> Optional[Witness]:
    """
    Searches X_JK, t ascending and y in (length, payload) order, for a pair
    with t^y in K. A witness forces x_J x_K != x_K x_J, so Q[x_J] has no
    native basis.
    """
    system = algebra.system
    J = maximal_subset(system, s)
    K = commuting_part(system, s)
    candidates = [t for t in members(J) if not (K >> (t - 1)) & 1]
    if not candidates:
        return None
    double = algebra.min_double_coset_reps(J, K)
    for t in candidates:
        for y in double:
            image = system.conjugate(y, t)
            if image is not None and (K >> (image - 1)) & 1:
                logger.debug("%s s=%d: witness t=%d y=%s", system.label, s, t, format_word(y.word()))
                return Witness(s=s, J=J, K=K, t=t, y=y, t_image=image)
    return None


# --------------------------------------------------
# NO-NATIVE-BASIS TABLE
# --------------------------------------------------


@dataclass(frozen=True)
class NoNativeRow:
    type_spec: str
    s: int
    K: Tuple[int, ...]
    t: int
    # y = d_{J1}^{K1} d_{J2}^{K2} ..., each factor written as digit strings
    factors: Tuple[Tuple[str, str], ...]
    t_image: int

    @property
    def label(self) -> str:
        return f"{self.type_spec} s={self.s}"

    def y_formula(self) -> str:
        return " ".join(f"d_{{{a}}}^{{{b}}}" for a, b in self.factors)


NO_NATIVE_ROWS: Tuple[NoNativeRow, ...] = (
    NoNativeRow("B3", 1, (3,), 2, (("23", "123"),), 3),
    NoNativeRow("H3", 1, (3,), 2, (("23", "123"),), 3),
    NoNativeRow("H3", 3, (1,), 2, (("12", "123"),), 1),
    NoNativeRow("A4", 2, (4,), 1, (("13", "123"), ("13", "134")), 4),
    NoNativeRow("B4", 2, (4,), 3, (("13", "123"), ("13", "134")), 4),
    NoNativeRow("H4", 2, (4,), 3, (("13", "123"), ("13", "134")), 4),
    NoNativeRow("H4", 4, (1, 2), 3, (("3", "34"), ("1", "12"), ("2", "23"), ("3", "34")), 2),
    NoNativeRow("D5", 1, (2, 4, 5), 3, (("234", "1234"), ("34", "345")), 4),
    NoNativeRow("E6", 6, (1, 2, 3, 4), 5, (("2345", "23456"), ("345", "1345")), 4),
    NoNativeRow("E7", 7, (1, 2, 3, 4, 5), 6, (("23456", "234567"), ("3456", "13456")), 5),
    NoNativeRow("E8", 8, (1, 2, 3, 4, 5, 6), 7, (("234567", "2345678"), ("34567", "134567")), 6),
)


@dataclass
class RowCheck:
    row: NoNativeRow
    y_word: str = ""
    K_matches: bool = False
    y_in_double_transversal: bool = False
    t_outside_K: bool = False
    t_image: Optional[int] = None
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> Dict[str, object]:
        return {
            "type": self.row.type_spec,
            "s": self.row.s,
            "K": list(self.row.K),
            "t": self.row.t,
            "y": self.row.y_formula(),
            "y_word": self.y_word,
            "t^y": self.t_image,
            "expected_t^y": self.row.t_image,
            "passed": self.passed,
            "failures": list(self.failures),
        }


def _digits_mask(digits: str, rank: int) -> SubsetMask:
    return mask_of([int(c) for c in digits], rank)


def element_from_factors(system: CoxeterSystem, factors: Sequence[Tuple[str, str]]) -> GroupElement:
    """Product d_{J1}^{K1} d_{J2}^{K2} ... with d_J^K = w_J w_K."""
    rank = system.rank
    return system.product(
        [system.coset_rep_d(_digits_mask(a, rank), _digits_mask(b, rank)) for a, b in factors]
    )


def verify_row(row: NoNativeRow, enumeration_cap: Optional[int] = None) -> RowCheck:
    """Checks one row using descents and conjugation only; never enumerates W."""
    system = build_system(row.type_spec, enumeration_cap=enumeration_cap)
    rank = system.rank
    J = maximal_subset(system, row.s)
    K = mask_of(row.K, rank)
    check = RowCheck(row=row)

    check.K_matches = commuting_part(system, row.s) == K
    if not check.K_matches:
        check.failures.append(
            f"K = J^s ∩ J is {format_subset_braces(commuting_part(system, row.s))}, "
            f"expected {format_subset_braces(K)}"
        )

    y = element_from_factors(system, row.factors)
    check.y_word = format_word(y.word())

    check.y_in_double_transversal = in_double_transversal(system, y, J, K)
    if not check.y_in_double_transversal:
        check.failures.append(f"y = {row.y_formula()} is not in X_JK")

    t_bit = 1 << (row.t - 1)
    check.t_outside_K = bool(J & t_bit) and not K & t_bit
    if not check.t_outside_K:
        check.failures.append(f"t = s{row.t} is not in J∖K")

    check.t_image = system.conjugate(y, row.t)
    if check.t_image != row.t_image:
        check.failures.append(f"t^y = {check.t_image}, expected s{row.t_image}")
    elif not (K >> (row.t_image - 1)) & 1:
        check.failures.append(f"t^y = s{row.t_image} is not in K")

    if check.passed:
        logger.debug("row %s passed (y = %s)", row.label, check.y_word)
    else:
        logger.warning("row %s failed: %s", row.label, "; ".join(check.failures))
    return check


def verify_no_native_rows(type_spec: Optional[str] = None, enumeration_cap: Optional[int] = None) -> List[RowCheck]:
    rows = [r for r in NO_NATIVE_ROWS if type_spec is None or r.type_spec == type_spec.upper()]
    return [verify_row(r, enumeration_cap) for r in rows]


# --------------------------------------------------
# THE TWO REMAINING NON-LEFT-CONNECTED CASES
# --------------------------------------------------


@dataclass(frozen=True)
class ExtraCase:
    type_spec: str
    s: int
    x_factors: Tuple[Tuple[str, str], ...]
    K: Tuple[int, ...]
    y_word: str
    expected: Tuple[int, ...]


EXTRA_CASES: Tuple[ExtraCase, ...] = (
    ExtraCase("H3", 2, (("1", "12"), ("2", "23")), (3,), "2 1 3 2 1 2", (1,)),
    ExtraCase("F4", 1, (("23", "123"),), (2, 3), "1 2 3 2 4 3 2 1", (4,)),
)


@dataclass
class ExtraCaseCheck:
    case: ExtraCase
    J_x_meet_J: Tuple[int, ...] = ()
    K_y_meet_J: Tuple[int, ...] = ()
    support_JK: Tuple[str, ...] = ()
    support_KJ: Tuple[str, ...] = ()
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> Dict[str, object]:
        return {
            "type": self.case.type_spec,
            "s": self.case.s,
            "J^x ∩ J": list(self.J_x_meet_J),
            "K^y ∩ J": list(self.K_y_meet_J),
            "expected": list(self.case.expected),
            "supp(x_J x_K)": list(self.support_JK),
            "supp(x_K x_J)": list(self.support_KJ),
            "passed": self.passed,
            "failures": list(self.failures),
        }


def verify_extra_case(case: ExtraCase, enumeration_cap: Optional[int] = None) -> ExtraCaseCheck:
    system = build_system(case.type_spec, enumeration_cap=enumeration_cap)
    algebra = DescentAlgebra(system)
    rank = system.rank
    J = maximal_subset(system, case.s)
    K = mask_of(case.K, rank)
    check = ExtraCaseCheck(case=case)

    x = element_from_factors(system, case.x_factors)
    check.J_x_meet_J = tuple(members(system.conjugate_subset(J, x, J)))
    if check.J_x_meet_J != case.K:
        check.failures.append(f"J^x ∩ J = {list(check.J_x_meet_J)}, expected {list(case.K)}")

    y = system.element_from_word(case.y_word)
    meet = system.conjugate_subset(K, y, J)
    check.K_y_meet_J = tuple(members(meet))
    if check.K_y_meet_J != case.expected:
        check.failures.append(f"K^y ∩ J = {list(check.K_y_meet_J)}, expected {list(case.expected)}")
    if is_subset(meet, K):
        check.failures.append("K^y ∩ J is contained in K")

    jk = algebra.solomon_product(J, K)
    kj = algebra.solomon_product(K, J)
    check.support_JK = tuple(format_subset(L) for L in jk.support())
    check.support_KJ = tuple(format_subset(L) for L in kj.support())
    if check.support_JK == check.support_KJ:
        check.failures.append("supp(x_J x_K) equals supp(x_K x_J)")

    if not check.passed:
        logger.warning("%s s=%d failed: %s", case.type_spec, case.s, "; ".join(check.failures))
    return check


def verify_extra_cases(enumeration_cap: Optional[int] = None) -> List[ExtraCaseCheck]:
    return [verify_extra_case(case, enumeration_cap) for case in EXTRA_CASES]
