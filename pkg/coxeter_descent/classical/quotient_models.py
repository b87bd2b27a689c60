from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Union

import sympy

from coxeter_descent.algebra.polynomials import X, QPolynomial
from coxeter_descent.classical.chain_formulas import (
    ChainVector,
    Scalar,
    chain_family,
    chain_indices,
    closed_form_product,
    fold_chain,
)
from coxeter_descent.classical.falling import FallingPoly
from coxeter_descent.core.coxeter_types import Family
from coxeter_descent.core.errors import SubsetError
from coxeter_descent.utils.logging_utils import setup_logger

logger = setup_logger("classical.quotient")


@dataclass(frozen=True)
class QuotientModel:
    """
    Q[x] modulo
      A_n: x^(n+1) - x^(n)
      B_n: x^(n+1)
      D_n: x^(n) - x^(n-1)
    kept in the falling basis, with x_j sent to x^(n-j) (A) or 2^(n-j) x^(n-j) (B, D).
    """

    family: Family
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", chain_family(self.family))
        chain_indices(self.family, self.n)

    @property
    def top(self) -> int:
        """Degree of the modulus."""
        return self.n if self.family is Family.D else self.n + 1

    @property
    def folds(self) -> bool:
        # A and D identify x^(top) with x^(top-1); B kills it
        return self.family is not Family.B

    @property
    def modulus(self) -> FallingPoly:
        terms: Dict[int, Scalar] = {self.top: 1}
        if self.folds:
            terms[self.top - 1] = -1
        return FallingPoly.from_terms(terms)

    def modulus_polynomial(self) -> QPolynomial:
        return self.modulus.to_polynomial()

    def reduce(self, p: FallingPoly) -> FallingPoly:
        """
        x^(k) for k > top is a multiple of x^(top+1) and of the modulus, so it
        vanishes; x^(top) folds into x^(top-1) or vanishes.
        """
        out: Dict[int, Fraction] = {}
        for k, c in p.terms().items():
            if k < self.top:
                out[k] = out.get(k, Fraction(0)) + c
            elif k == self.top and self.folds:
                out[k - 1] = out.get(k - 1, Fraction(0)) + c
        return FallingPoly.from_terms(out)

    def reduce_symbolically(self, p: FallingPoly) -> FallingPoly:
        """Same reduction through sympy's polynomial remainder in the monomial basis."""
        numerator = p.to_polynomial().to_sympy()
        remainder = sympy.rem(numerator, self.modulus_polynomial().to_sympy(), X)
        return FallingPoly.from_polynomial(QPolynomial.from_sympy(sympy.Poly(remainder, X, domain="QQ")))

    def _scale(self, j: int) -> int:
        return 1 if self.family is Family.A else 2 ** (self.n - j)

    def image(self, j: int) -> FallingPoly:
        valid = chain_indices(self.family, self.n)
        if j not in valid:
            raise SubsetError(f"chain index {j} outside {valid.start}..{valid.stop - 1} for {self.family.value}{self.n}")
        return FallingPoly.power(self.n - j, self._scale(j))

    def image_of(self, coeffs: Mapping[int, Scalar]) -> FallingPoly:
        out = FallingPoly()
        for j, c in fold_chain(self.family, self.n, coeffs).items():
            out = out + self.image(j).scale(c)
        return out

    def preimage(self, p: FallingPoly) -> ChainVector:
        reduced = self.reduce(p)
        out: Dict[int, Fraction] = {}
        for k, c in reduced.terms().items():
            j = self.n - k
            out[j] = c / self._scale(j)
        return fold_chain(self.family, self.n, out)

    def multiply(self, j: int, k: int) -> ChainVector:
        return self.preimage(self.image(j) * self.image(k))

    def mismatches(self, symbolic: bool = False) -> Dict[str, Dict[str, str]]:
        """
        Chain pairs whose product in the quotient differs from the closed form,
        keyed "j,k". With `symbolic`, also compares falling reduction to sympy.rem.
        """
        bad: Dict[str, Dict[str, str]] = {}
        indices = list(chain_indices(self.family, self.n))
        for j in indices:
            for k in indices:
                product = self.image(j) * self.image(k)
                got = self.preimage(product)
                expected = closed_form_product(self.family, self.n, j, k)
                if got != expected:
                    bad[f"{j},{k}"] = {"quotient": _format(got), "closed_form": _format(expected)}
                if symbolic and self.reduce(product) != self.reduce_symbolically(product):
                    bad[f"{j},{k}:rem"] = {
                        "falling": str(self.reduce(product)),
                        "sympy_rem": str(self.reduce_symbolically(product)),
                    }
        if bad:
            logger.warning("%s%d quotient model: %d mismatches", self.family.value, self.n, len(bad))
        return bad


def _format(vector: Mapping[int, Fraction]) -> str:
    return " + ".join(f"{c}*x_{j}" for j, c in vector.items()) or "0"


def quotient_model(family: Union[Family, str], n: int) -> QuotientModel:
    return QuotientModel(chain_family(family), n)
