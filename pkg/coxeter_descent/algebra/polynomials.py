from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

import sympy

Scalar = Union[int, Fraction]

X = sympy.Symbol("x")


def to_sympy(value: Scalar) -> sympy.Rational:
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def from_sympy(value: sympy.Expr) -> Fraction:
    rational = sympy.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


def _strip(coefficients: Iterable[Scalar]) -> Tuple[Fraction, ...]:
    values = [Fraction(c) for c in coefficients]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class QPolynomial:
    """Dense polynomial over Q, coefficients in ascending degree."""

    coefficients: Tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", _strip(self.coefficients))

    @classmethod
    def constant(cls, value: Scalar) -> "QPolynomial":
        return cls((value,))

    @classmethod
    def variable(cls) -> "QPolynomial":
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar]) -> "QPolynomial":
        """Monic product of (x - a) over the given roots."""
        out = cls.constant(1)
        for a in roots:
            out = out * cls((-Fraction(a), 1))
        return out

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_monic(self) -> bool:
        return self.leading == 1

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients)

    def coefficient(self, k: int) -> Fraction:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else Fraction(0)

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        size = max(len(self.coefficients), len(other.coefficients))
        return QPolynomial(self.coefficient(k) + other.coefficient(k) for k in range(size))

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(-c for c in self.coefficients)

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        return self + (-other)

    def __mul__(self, other: Union["QPolynomial", Scalar]) -> "QPolynomial":
        if not isinstance(other, QPolynomial):
            return QPolynomial(c * Fraction(other) for c in self.coefficients)
        if self.is_zero() or other.is_zero():
            return QPolynomial()
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return QPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, value: Scalar) -> Fraction:
        result = Fraction(0)
        for c in reversed(self.coefficients):
            result = result * value + c
        return result

    # --------------------------------------------------
    # SYMPY BRIDGE
    # --------------------------------------------------

    def to_sympy(self) -> sympy.Poly:
        return sympy.Poly(list(reversed([to_sympy(c) for c in self.coefficients])) or [0], X, domain="QQ")

    @classmethod
    def from_sympy(cls, poly: sympy.Poly) -> "QPolynomial":
        return cls(from_sympy(c) for c in reversed(poly.all_coeffs()))

    def factored(self) -> str:
        if self.is_zero():
            return "0"
        return str(sympy.factor(self.to_sympy().as_expr()))

    def rational_roots(self) -> List[Fraction]:
        return sorted(from_sympy(r) for r in sympy.roots(self.to_sympy(), filter="Q"))

    # --------------------------------------------------
    # OUTPUT
    # --------------------------------------------------

    def to_json(self) -> List[str]:
        return [str(c) for c in self.coefficients]

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return str(self.to_sympy().as_expr())


def polynomial(coefficients: Sequence[Scalar]) -> QPolynomial:
    return QPolynomial(tuple(coefficients))
