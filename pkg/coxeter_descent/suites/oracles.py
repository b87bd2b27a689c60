from __future__ import annotations

import random
import time
from typing import List, Sequence

from coxeter_descent.algebra.descent_algebra import DescentAlgebra
from coxeter_descent.algebra.polynomials import QPolynomial
from coxeter_descent.algebra.subalgebra import minimal_polynomial, permutation_character_values
from coxeter_descent.core.coxeter_system import build_system
from coxeter_descent.core.subsets import all_subsets, format_subset
from coxeter_descent.suites.base_suite import BaseSuite
from coxeter_descent.utils.config import Settings

ORACLE_TYPES: tuple = ("A1", "A2", "A3", "A4", "B3", "D4", "H3") + tuple(f"I2:{m}" for m in range(3, 9))
RANDOM_SAMPLES = 8


class SolomonOracleSuite(BaseSuite):
    """
    Solomon's rule against convolution in the group algebra: every basis
    pair, plus seeded random combinations with small integer coefficients.
    """

    name = "solomon_oracle"

    def __init__(
        self,
        settings: Settings,
        type_specs: Sequence[str] = ORACLE_TYPES,
        samples: int = RANDOM_SAMPLES,
    ) -> None:
        super().__init__(settings)
        self.type_specs = tuple(type_specs)
        self.samples = samples

    def collect(self) -> None:
        rng = random.Random(self.settings.seed)
        for spec in self.type_specs:
            algebra = DescentAlgebra(build_system(spec, enumeration_cap=self.enumeration_cap))
            label = algebra.system.label
            subsets = all_subsets(algebra.rank)
            lifted = {J: algebra.descent_to_group_algebra(algebra.x(J)) for J in subsets}

            started = time.perf_counter()
            bad: List[str] = []
            for J in subsets:
                for K in subsets:
                    product = algebra.solomon_product(J, K)
                    if algebra.descent_to_group_algebra(product) != algebra.convolve(lifted[J], lifted[K]):
                        bad.append(f"{format_subset(J)} * {format_subset(K)}")
            self.check(f"{label}: x_J x_K by Solomon's rule equals group-algebra convolution", [], bad, started=started)

            started = time.perf_counter()
            bad = []
            for sample in range(self.samples):
                a = algebra.element({J: rng.randint(-3, 3) for J in rng.sample(subsets, min(3, len(subsets)))})
                b = algebra.element({K: rng.randint(-3, 3) for K in rng.sample(subsets, min(3, len(subsets)))})
                lhs = algebra.descent_to_group_algebra(algebra.product_of_elements(a, b))
                rhs = algebra.convolve(algebra.descent_to_group_algebra(a), algebra.descent_to_group_algebra(b))
                if lhs != rhs:
                    bad.append(f"sample {sample}: ({a}) * ({b})")
            self.check(
                f"{label}: {self.samples} random combinations (seed {self.settings.seed})", [], bad, started=started
            )


MINIMAL_POLYNOMIAL_TYPES = ORACLE_TYPES


class MinimalPolynomialSuite(BaseSuite):
    """μ(x_J) = Π (x - a) over the values a of the permutation character on W/W_J, for every J."""

    name = "minimal_polynomials"

    def __init__(self, settings: Settings, type_specs: Sequence[str] = MINIMAL_POLYNOMIAL_TYPES) -> None:
        super().__init__(settings)
        self.type_specs = tuple(type_specs)

    def collect(self) -> None:
        for spec in self.type_specs:
            algebra = DescentAlgebra(build_system(spec, enumeration_cap=self.enumeration_cap))
            label = algebra.system.label
            started = time.perf_counter()
            bad: List[str] = []
            for J in all_subsets(algebra.rank):
                values = sorted(permutation_character_values(algebra, J))
                mu = minimal_polynomial(algebra, J)
                if mu != QPolynomial.from_roots(values):
                    bad.append(f"J={format_subset(J)}: mu = {mu.factored()}, character values {values}")
            self.check(
                f"{label}: minimal polynomials of all x_J match permutation character values",
                [],
                bad,
                started=started,
            )
