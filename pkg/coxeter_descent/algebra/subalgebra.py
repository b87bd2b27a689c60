from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Set

import sympy

from coxeter_descent.algebra.algebra_element import AlgebraElement, format_rational
from coxeter_descent.algebra.descent_algebra import DescentAlgebra
from coxeter_descent.algebra.polynomials import QPolynomial, from_sympy, to_sympy
from coxeter_descent.core.coxeter_system import CoxeterSystem
from coxeter_descent.core.element_models import Payload
from coxeter_descent.core.errors import CoxeterError
from coxeter_descent.core.subsets import SubsetMask, bit_indices, format_subset
from coxeter_descent.utils.logging_utils import setup_logger

logger = setup_logger("algebra.subalgebra")

SCHEMA_VERSION = "1"


@dataclass
class SubalgebraReport:
    system: CoxeterSystem = field(repr=False)
    J: SubsetMask
    dim: int
    minimal_poly: QPolynomial
    has_native_basis: bool
    native_basis: List[SubsetMask]
    # row i expresses native_basis[i] in the powers x_J^0 .. x_J^(dim-1)
    change_of_basis: List[List[Fraction]]
    all_integer: bool

    @property
    def type_label(self) -> str:
        return self.system.label

    def to_json(self) -> Dict[str, object]:
        return {
            "schema": SCHEMA_VERSION,
            "type": self.type_label,
            "J": format_subset(self.J),
            "dim": self.dim,
            "minimal_poly": self.minimal_poly.to_json(),
            "native": self.has_native_basis,
            "native_basis": [format_subset(L) for L in self.native_basis],
            "integral": self.all_integer,
            "change_of_basis": [[format_rational(c) for c in row] for row in self.change_of_basis],
        }


def _coordinate_matrix(columns: Sequence[AlgebraElement], masks: Sequence[int]) -> sympy.Matrix:
    return sympy.Matrix(
        [[to_sympy(col.coefficient(mask)) for col in columns] for mask in masks]
    )


def _support_union(elements: Sequence[AlgebraElement]) -> List[int]:
    masks: Set[int] = set()
    for e in elements:
        masks.update(e.support())
    return sorted(masks)


def _solve(columns: Sequence[AlgebraElement], target: AlgebraElement) -> List[Fraction]:
    """Unique coefficients c with sum c_i columns[i] = target (columns independent)."""
    masks = sorted(set(_support_union(columns)) | set(target.support()))
    matrix = _coordinate_matrix(columns, masks)
    rhs = sympy.Matrix([to_sympy(target.coefficient(mask)) for mask in masks])
    solution, params = matrix.gauss_jordan_solve(rhs)
    if params.shape[0]:
        raise CoxeterError("coordinate system is not independent")
    return [from_sympy(v) for v in solution]


def powers_in_x_basis(algebra: DescentAlgebra, J: int, up_to: int) -> List[AlgebraElement]:
    """x_J^0 = x_S, x_J^1, ..., x_J^up_to."""
    x_j = algebra.x(J)
    out = [algebra.one()]
    for _ in range(up_to):
        out.append(algebra.product_of_elements(out[-1], x_j))
    return out


def minimal_polynomial(algebra: DescentAlgebra, J: int) -> QPolynomial:
    """
    Monic polynomial of least degree annihilating x_J, by exact elimination
    on the coordinates of successive powers.
    """
    x_j = algebra.x(J)
    powers = [algebra.one()]
    bound = (1 << algebra.rank) + 1
    while len(powers) <= bound:
        following = algebra.product_of_elements(powers[-1], x_j)
        masks = sorted(set(_support_union(powers)) | set(following.support()))
        independent = _coordinate_matrix(powers, masks)
        extended = independent.row_join(_coordinate_matrix([following], masks))
        if extended.rank() == len(powers):
            coefficients = _solve(powers, following)
            return QPolynomial([-c for c in coefficients] + [Fraction(1)])
        powers.append(following)
    raise CoxeterError(f"no annihilating polynomial of degree <= {bound} for x_{format_subset(J)}")


def _coset_representative(system: CoxeterSystem, payload: Payload, J: int) -> Payload:
    model = system.model
    bits = list(bit_indices(J))
    reducing = True
    while reducing:
        reducing = False
        for i in bits:
            if not model.has_right_ascent(payload, i):
                payload = model.multiply(payload, model.generator(i))
                reducing = True
                break
    return payload


def permutation_character_values(algebra: DescentAlgebra, J: int) -> Set[int]:
    """{π_J(w) : w in W}, counting fixed cosets of each w acting on W/W_J."""
    system = algebra.system
    model = system.model
    cosets = [w.payload for w in algebra.min_coset_reps(J)]
    values: Set[int] = set()
    for w in system.enumerate_group():
        fixed = 0
        for x in cosets:
            if _coset_representative(system, model.multiply(w.payload, x), J) == x:
                fixed += 1
        values.add(fixed)
    return values


def minimal_polynomial_matches_character(algebra: DescentAlgebra, J: int) -> bool:
    """μ(x_J) = Π (x - a) over the permutation character values a."""
    values = permutation_character_values(algebra, J)
    return minimal_polynomial(algebra, J) == QPolynomial.from_roots(sorted(values))


def detect_native_basis(algebra: DescentAlgebra, J: int) -> SubalgebraReport:
    """
    Decides whether Q[x_J] is spanned by basis elements x_L.

    V is spanned by the powers x_J^0..x_J^(dim-1); N collects every L with
    x_L in V. Distinct x_L are independent, so a native basis exists iff |N| = dim.
    """
    system = algebra.system
    J = system.check_subset(J)
    mu = minimal_polynomial(algebra, J)
    dim = mu.degree
    powers = powers_in_x_basis(algebra, J, dim - 1)
    masks = _support_union(powers)
    span = _coordinate_matrix(powers, masks)

    members: List[SubsetMask] = []
    for L in masks:
        unit = sympy.Matrix([1 if mask == L else 0 for mask in masks])
        if span.row_join(unit).rank() == dim:
            members.append(SubsetMask(L))

    has_native = len(members) == dim
    change: List[List[Fraction]] = []
    if has_native:
        change = [_solve(powers, algebra.x(L)) for L in members]
    all_integer = has_native and all(c.denominator == 1 for row in change for c in row)

    logger.debug(
        "%s J=%s: dim=%d native=%s integral=%s",
        system.label,
        format_subset(J),
        dim,
        has_native,
        all_integer,
    )
    return SubalgebraReport(
        system=system,
        J=J,
        dim=dim,
        minimal_poly=mu,
        has_native_basis=has_native,
        native_basis=list(members) if has_native else [],
        change_of_basis=change,
        all_integer=all_integer,
    )
