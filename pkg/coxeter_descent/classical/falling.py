from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Dict, Iterable, Union

from coxeter_descent.algebra.polynomials import QPolynomial
from coxeter_descent.classical.stirling import signed_stirling_first, stirling_second

Scalar = Union[int, Fraction]


def _strip(values: Iterable[Scalar]):
    out = [Fraction(v) for v in values]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class FallingPoly:
    """
    Polynomial in the falling-power basis: coefficients[k] multiplies
    x^(k) = x (x - 1) ... (x - k + 1).
    """

    coefficients: tuple = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", _strip(self.coefficients))

    @classmethod
    def power(cls, k: int, coefficient: Scalar = 1) -> "FallingPoly":
        if k < 0:
            raise ValueError(f"falling power needs k >= 0, got {k}")
        return cls(tuple([0] * k + [coefficient]))

    @classmethod
    def from_terms(cls, terms: Dict[int, Scalar]) -> "FallingPoly":
        if not terms:
            return cls()
        size = max(terms) + 1
        return cls(tuple(terms.get(k, 0) for k in range(size)))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, k: int) -> Fraction:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else Fraction(0)

    def terms(self) -> Dict[int, Fraction]:
        return {k: c for k, c in enumerate(self.coefficients) if c}

    def is_zero(self) -> bool:
        return not self.coefficients

    def __add__(self, other: "FallingPoly") -> "FallingPoly":
        size = max(len(self.coefficients), len(other.coefficients))
        return FallingPoly(tuple(self.coefficient(k) + other.coefficient(k) for k in range(size)))

    def __sub__(self, other: "FallingPoly") -> "FallingPoly":
        return self + other.scale(-1)

    def scale(self, factor: Scalar) -> "FallingPoly":
        return FallingPoly(tuple(c * factor for c in self.coefficients))

    def __mul__(self, other: Union["FallingPoly", Scalar]) -> "FallingPoly":
        if not isinstance(other, FallingPoly):
            return self.scale(other)
        out: Dict[int, Fraction] = {}
        for a, ca in self.terms().items():
            for b, cb in other.terms().items():
                for k, c in falling_product(a, b).terms().items():
                    out[k] = out.get(k, Fraction(0)) + ca * cb * c
        return FallingPoly.from_terms(out)

    __rmul__ = __mul__

    def to_polynomial(self) -> QPolynomial:
        """Monomial coordinates: x^(k) = sum_m s(k, m) x^m with signed s."""
        out = [Fraction(0)] * len(self.coefficients)
        for k, c in self.terms().items():
            for m in range(k + 1):
                out[m] += c * signed_stirling_first(k, m)
        return QPolynomial(tuple(out))

    @classmethod
    def from_polynomial(cls, p: QPolynomial) -> "FallingPoly":
        """x^m = sum_k {m, k} x^(k)."""
        out = [Fraction(0)] * len(p.coefficients)
        for m, c in enumerate(p.coefficients):
            if not c:
                continue
            for k in range(m + 1):
                out[k] += c * stirling_second(m, k)
        return cls(tuple(out))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return " + ".join(f"{c}*x^({k})" for k, c in self.terms().items())


def falling_product(a: int, b: int) -> FallingPoly:
    """
    x^(a) x^(b) = sum_k C(a, k) C(b, k) k! x^(a + b - k): partial bijections
    between an a-set and a b-set with k matched pairs.
    """
    if a < 0 or b < 0:
        raise ValueError(f"falling powers need a, b >= 0, got ({a}, {b})")
    terms = {a + b - k: comb(a, k) * comb(b, k) * factorial(k) for k in range(min(a, b) + 1)}
    return FallingPoly.from_terms(terms)
