from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Dict, List, Mapping, Optional, Tuple, Union

import sympy

from coxeter_descent.algebra.algebra_element import AlgebraElement
from coxeter_descent.algebra.descent_algebra import DescentAlgebra
from coxeter_descent.algebra.polynomials import QPolynomial
from coxeter_descent.classical.stirling import stirling_first, stirling_second
from coxeter_descent.core.coxeter_types import MIN_CLASSICAL_RANK, Family
from coxeter_descent.core.errors import ConstructionError, SubsetError
from coxeter_descent.core.subsets import EMPTY, SubsetMask, format_subset, is_left_connected, left_chain

Scalar = Union[int, Fraction]
ChainVector = Dict[int, Fraction]

TO_POWERS = "to_powers"
TO_NATIVES = "to_natives"


def chain_family(family: Union[Family, str]) -> Family:
    value = Family(family) if isinstance(family, str) else family
    if value not in MIN_CLASSICAL_RANK:
        raise ConstructionError(f"chain formulas exist for types A, B, D only, got {value.value}")
    return value


def _check_rank(family: Family, n: int) -> None:
    minimum = MIN_CLASSICAL_RANK[family]
    if n < minimum:
        raise ConstructionError(f"{family.value} requires rank >= {minimum}, got rank {n}")


def chain_indices(family: Union[Family, str], n: int) -> range:
    """Valid chain indices j of x_j: 0..n for A and B, 1..n for D."""
    family = chain_family(family)
    _check_rank(family, n)
    return range(1, n + 1) if family is Family.D else range(0, n + 1)


def _check_index(family: Family, n: int, j: int, what: str = "chain index") -> None:
    valid = chain_indices(family, n)
    if j not in valid:
        raise SubsetError(f"{what} {j} outside {valid.start}..{valid.stop - 1} for {family.value}{n}")


def chain_mask(family: Union[Family, str], n: int, j: int) -> SubsetMask:
    """
    Subset {s_1..s_j} behind x_j. Type D has no chain member {s_1}: its
    index 1 stands for the empty set.
    """
    family = chain_family(family)
    _check_index(family, n, j)
    if family is Family.D and j == 1:
        return EMPTY
    return left_chain(j)


def chain_index_of_mask(family: Union[Family, str], n: int, mask: int) -> Optional[int]:
    family = chain_family(family)
    _check_rank(family, n)
    if mask >> n or not is_left_connected(mask, family.value):
        return None
    j = mask.bit_length()
    if family is Family.D and j == 0:
        return 1
    return j


def fold_chain(family: Union[Family, str], n: int, coeffs: Mapping[int, Scalar]) -> ChainVector:
    """
    The single place where boundary symbols are normalized:
    A: x_-1 := x_0.  B: x_-1 := 0.  D: x_0 := 2 x_1.
    """
    family = chain_family(family)
    out: Dict[int, Fraction] = {}

    def add(index: int, value: Fraction) -> None:
        out[index] = out.get(index, Fraction(0)) + value

    for index, value in coeffs.items():
        value = Fraction(value)
        if not value:
            continue
        if family is Family.A and index == -1:
            add(0, value)
        elif family is Family.B and index == -1:
            continue
        elif family is Family.D and index == 0:
            add(1, 2 * value)
        else:
            _check_index(family, n, index)
            add(index, value)
    return {k: v for k, v in sorted(out.items()) if v}


# --------------------------------------------------
# RECURRENCES AND POLYNOMIALS IN x_(n-1)
# --------------------------------------------------


def _max_step(family: Family, n: int) -> int:
    return n - 1 if family is Family.D else n


def chain_recurrence(family: Union[Family, str], n: int, k: int) -> Tuple[int, int]:
    """
    (c, i) with x_(n-1) x_(n-k) = c x_(n-k) + x_i before folding:
    c = k for A and 2k for B and D, i = n - k - 1.
    """
    family = chain_family(family)
    _check_rank(family, n)
    if not 0 <= k <= _max_step(family, n):
        raise SubsetError(f"recurrence step k={k} outside 0..{_max_step(family, n)} for {family.value}{n}")
    coefficient = k if family is Family.A else 2 * k
    return coefficient, n - k - 1


def recurrence_product(family: Union[Family, str], n: int, k: int) -> ChainVector:
    family = chain_family(family)
    coefficient, successor = chain_recurrence(family, n, k)
    return fold_chain(family, n, {n - k: coefficient, successor: 1})


def chain_as_polynomial(family: Union[Family, str], n: int, k: int) -> QPolynomial:
    """p with p(x_(n-1)) = x_(n-k): prod_(i<k) (x - i) for A, prod_(i<k) (x - 2i) for B and D."""
    family = chain_family(family)
    _check_rank(family, n)
    if not 0 <= k <= _max_step(family, n):
        raise SubsetError(f"k={k} outside 0..{_max_step(family, n)} for {family.value}{n}")
    step = 1 if family is Family.A else 2
    out = QPolynomial.constant(1)
    for i in range(k):
        out = out * QPolynomial((-step * i, 1))
    return out


def base_change(family: Union[Family, str], n: int, direction: str) -> List[List[int]]:
    """
    to_powers:  row k gives x_(n-k) in the powers x_(n-1)^m.
    to_natives: row k gives x_(n-1)^k in the natives x_(n-m).
    """
    family = chain_family(family)
    _check_rank(family, n)
    size = _max_step(family, n) + 1
    twist = 1 if family is Family.A else 2
    if direction == TO_POWERS:
        return [
            [(-twist) ** (k - m) * stirling_first(k, m) if m <= k else 0 for m in range(size)]
            for k in range(size)
        ]
    if direction == TO_NATIVES:
        return [
            [twist ** (k - m) * stirling_second(k, m) if m <= k else 0 for m in range(size)]
            for k in range(size)
        ]
    raise ValueError(f"unknown base change direction {direction!r}; use {TO_POWERS} or {TO_NATIVES}")


def base_changes_are_inverse(family: Union[Family, str], n: int) -> bool:
    forward = sympy.Matrix(base_change(family, n, TO_POWERS))
    backward = sympy.Matrix(base_change(family, n, TO_NATIVES))
    return forward * backward == sympy.eye(forward.rows)


# --------------------------------------------------
# CLOSED-FORM STRUCTURE CONSTANTS
# --------------------------------------------------


def closed_form_coefficient(family: Union[Family, str], n: int, j: int, k: int, l: int) -> int:
    """C(n-j, k-l) C(n-k, j-l) (n-j-k+l)!, times 2^(n-j-k+l) for B and D."""
    family = chain_family(family)
    free = n - j - k + l
    if free < 0 or k - l < 0 or j - l < 0:
        return 0
    value = comb(n - j, k - l) * comb(n - k, j - l) * factorial(free)
    if family is not Family.A:
        value *= 2**free
    return value


def closed_form_product(family: Union[Family, str], n: int, j: int, k: int) -> ChainVector:
    family = chain_family(family)
    _check_index(family, n, j)
    _check_index(family, n, k)
    lowest = -1 if family is Family.A else 0
    raw = {l: closed_form_coefficient(family, n, j, k, l) for l in range(lowest, min(j, k) + 1)}
    return fold_chain(family, n, raw)


def chain_product(
    family: Union[Family, str], n: int, a: Mapping[int, Scalar], b: Mapping[int, Scalar]
) -> ChainVector:
    family = chain_family(family)
    out: Dict[int, Fraction] = {}
    for j, ca in fold_chain(family, n, a).items():
        for k, cb in fold_chain(family, n, b).items():
            for l, c in closed_form_product(family, n, j, k).items():
                out[l] = out.get(l, Fraction(0)) + ca * cb * c
    return {l: c for l, c in sorted(out.items()) if c}


# --------------------------------------------------
# BRIDGE TO THE DESCENT ALGEBRA
# --------------------------------------------------


def chain_element(algebra: DescentAlgebra, family: Union[Family, str], coeffs: Mapping[int, Scalar]) -> AlgebraElement:
    family = chain_family(family)
    n = algebra.rank
    out: Dict[int, Fraction] = {}
    for j, c in fold_chain(family, n, coeffs).items():
        mask = chain_mask(family, n, j)
        out[mask] = out.get(mask, Fraction(0)) + c
    return algebra.element(out)


def chain_coordinates(family: Union[Family, str], n: int, element: AlgebraElement) -> ChainVector:
    family = chain_family(family)
    out: Dict[int, Fraction] = {}
    for mask, c in element.items():
        j = chain_index_of_mask(family, n, mask)
        if j is None:
            raise SubsetError(f"x_{format_subset(mask)} is not a chain element of {family.value}{n}")
        out[j] = c
    return dict(sorted(out.items()))


def solomon_chain_product(algebra: DescentAlgebra, family: Union[Family, str], j: int, k: int) -> ChainVector:
    """x_j x_k computed by Solomon's rule, read back in chain coordinates."""
    family = chain_family(family)
    n = algebra.rank
    product = algebra.solomon_product(chain_mask(family, n, j), chain_mask(family, n, k))
    return chain_coordinates(family, n, product)


# --------------------------------------------------
# D_n -> A_(n-1)
# --------------------------------------------------


def phi_D_to_A(n: int, element: Mapping[int, Scalar]) -> ChainVector:
    """x_j^D -> 2^(n-j) x_(j-1)^A, extended linearly."""
    if n < 3:
        raise ConstructionError(f"D requires rank >= 3, got rank {n}")
    out: Dict[int, Fraction] = {}
    for j, c in fold_chain(Family.D, n, element).items():
        out[j - 1] = out.get(j - 1, Fraction(0)) + Fraction(c) * 2 ** (n - j)
    return {k: v for k, v in sorted(out.items()) if v}


def phi_failures(n: int) -> List[Tuple[int, int]]:
    """Pairs (j, k) where phi(x_j x_k) != phi(x_j) phi(x_k)."""
    bad = []
    for j in chain_indices(Family.D, n):
        for k in chain_indices(Family.D, n):
            left = phi_D_to_A(n, closed_form_product(Family.D, n, j, k))
            right = chain_product(Family.A, n - 1, phi_D_to_A(n, {j: 1}), phi_D_to_A(n, {k: 1}))
            if left != right:
                bad.append((j, k))
    return bad


def intersection_counts(algebra: DescentAlgebra, family: Union[Family, str], j: int, k: int) -> ChainVector:
    """
    #{d in X_jk : {s_1..s_j}^d ∩ {s_1..s_k} = L} by walking X_jk directly,
    bypassing the memoized structure constants.
    """
    family = chain_family(family)
    n = algebra.rank
    system = algebra.system
    J = chain_mask(family, n, j)
    K = chain_mask(family, n, k)
    out: Dict[int, Fraction] = {}
    for d in algebra.min_double_coset_reps(J, K):
        meet = system.conjugate_subset(J, d, K)
        index = chain_index_of_mask(family, n, meet)
        if index is None:
            raise SubsetError(f"x_{format_subset(meet)} is not a chain element of {family.value}{n}")
        out[index] = out.get(index, Fraction(0)) + 1
    return dict(sorted(out.items()))
