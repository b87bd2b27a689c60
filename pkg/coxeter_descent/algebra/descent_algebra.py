from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from coxeter_descent.algebra.algebra_element import AlgebraElement, Scalar
from coxeter_descent.core.coxeter_system import CoxeterSystem, GroupElement, format_word
from coxeter_descent.core.element_models import Payload
from coxeter_descent.core.errors import (
    EnumerationCapError,
    MixedSystemError,
    SubsetError,
    TransversalFactorizationError,
)
from coxeter_descent.core.subsets import (
    SubsetMask,
    bit_indices,
    format_subset,
    full_mask,
    is_subset,
)
from coxeter_descent.utils.logging_utils import setup_logger

GroupAlgebraVector = Dict[Payload, Fraction]

LEFT = "left"
RELATIVE = "relative"
DOUBLE = "double"


@dataclass(frozen=True)
class Transversal:
    """
    left:     X_J, minimal length representatives of the cosets w W_J
    relative: X_J^(K) = X_J ∩ W_K
    double:   X_JK = X_J^-1 ∩ X_K
    Elements are ordered by (length, payload).
    """

    kind: str
    J: SubsetMask
    K: Optional[SubsetMask]
    elements: Tuple[GroupElement, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[GroupElement]:
        return iter(self.elements)

    def __contains__(self, w: object) -> bool:
        return w in self.elements

    def words(self) -> List[str]:
        return [format_word(w.word()) for w in self.elements]

    def to_json(self) -> Dict[str, object]:
        return {
            "kind": self.kind,
            "J": format_subset(self.J),
            "K": None if self.K is None else format_subset(self.K),
            "size": len(self.elements),
            "elements": self.words(),
        }


@dataclass(frozen=True)
class _CosetEntry:
    payload: Payload
    left_descents: int
    # conjugates[i] = j when d^-1 s_i d = s_j, else -1
    conjugates: Tuple[int, ...]

    def conjugate_mask(self, J: int) -> int:
        out = 0
        for i in bit_indices(J):
            j = self.conjugates[i]
            if j >= 0:
                out |= 1 << j
        return out


class DescentAlgebra:
    """
    Solomon's descent algebra of a finite Coxeter system in the basis {x_J}.

    Structure constants a_JKL = #{d in X_JK : J^d ∩ K = L} are filled lazily
    per pair (J, K) and memoized. Only transversals X_K are ever built, so the
    enumeration cap bounds |X_K| rather than |W|.
    """

    def __init__(self, system: CoxeterSystem) -> None:
        self.system = system
        self.model = system.model
        self.rank = system.rank
        self.key = system.key
        self.logger = setup_logger("algebra.descent")
        self._closures: Dict[Tuple[int, int], List[Payload]] = {}
        self._entries: Dict[int, List[_CosetEntry]] = {}
        self._constants: Dict[Tuple[int, int], Dict[int, int]] = {}

    def __repr__(self) -> str:
        return f"DescentAlgebra({self.system.key})"

    # --------------------------------------------------
    # BASIS
    # --------------------------------------------------

    @property
    def full(self) -> SubsetMask:
        return full_mask(self.rank)

    def x(self, J: int, coefficient: Scalar = 1) -> AlgebraElement:
        J = self.system.check_subset(J)
        return AlgebraElement.basis(self.key, self.rank, J, coefficient)

    def one(self) -> AlgebraElement:
        return AlgebraElement.one(self.key, self.rank)

    def zero(self) -> AlgebraElement:
        return AlgebraElement.zero(self.key, self.rank)

    def element(self, coeffs: Mapping[int, Scalar]) -> AlgebraElement:
        return AlgebraElement(self.key, self.rank, coeffs)

    # --------------------------------------------------
    # TRANSVERSALS
    # --------------------------------------------------

    def _closure(self, J: int, within: int) -> List[Payload]:
        """
        X_J ∩ W_within by breadth-first left multiplication. The set is closed
        under removing left descents, so every member is reached from the identity.
        """
        cache_key = (J, within)
        if cache_key in self._closures:
            return self._closures[cache_key]

        model = self.model
        cap = self.system.enumeration_cap
        j_bits = list(bit_indices(J))
        gen_bits = list(bit_indices(within))
        generators = [(i, model.generator(i)) for i in gen_bits]

        what = f"X_{format_subset(J)} in {self.system.label}"
        expected = self.system.parabolic_order(within) // self.system.parabolic_order(J & within)
        if expected > cap:
            raise EnumerationCapError(what, expected, cap)

        level = [model.identity()]
        out: List[Payload] = []
        while level:
            out.extend(level)
            successors = set()
            for w in level:
                for i, g in generators:
                    if not model.has_left_ascent(w, i):
                        continue
                    candidate = model.multiply(g, w)
                    if all(model.has_right_ascent(candidate, b) for b in j_bits):
                        successors.add(candidate)
                        if len(out) + len(successors) > cap:
                            raise EnumerationCapError(what, len(out) + len(successors), cap)
            level = sorted(successors)

        self.logger.debug(
            "%s: |X_%s ∩ W_%s| = %d", self.system.label, format_subset(J), format_subset(within), len(out)
        )
        self._closures[cache_key] = out
        return out

    def _coset_entries(self, K: int) -> List[_CosetEntry]:
        if K in self._entries:
            return self._entries[K]
        model = self.model
        entries = []
        for d in self._closure(K, self.full):
            d_inv = model.inverse(d)
            left_descents = 0
            for i in range(self.rank):
                if not model.has_right_ascent(d_inv, i):
                    left_descents |= 1 << i
            conjugates = []
            for i in range(self.rank):
                j = model.conjugate_to_simple(d_inv, d, i)
                conjugates.append(-1 if j is None else j)
            entries.append(_CosetEntry(d, left_descents, tuple(conjugates)))
        self._entries[K] = entries
        return entries

    def _transversal(self, kind: str, J: int, K: Optional[int], payloads: List[Payload]) -> Transversal:
        return Transversal(
            kind=kind,
            J=SubsetMask(J),
            K=None if K is None else SubsetMask(K),
            elements=tuple(self.system.element(p) for p in payloads),
        )

    def min_coset_reps(self, J: int) -> Transversal:
        J = self.system.check_subset(J)
        return self._transversal(LEFT, J, None, self._closure(J, self.full))

    def relative_coset_reps(self, J: int, K: int) -> Transversal:
        J = self.system.check_subset(J)
        K = self.system.check_subset(K)
        if not is_subset(J, K):
            raise SubsetError(f"X_J^(K) needs J ⊆ K, got J={format_subset(J)} K={format_subset(K)}")
        return self._transversal(RELATIVE, J, K, self._closure(J, K))

    def min_double_coset_reps(self, J: int, K: int) -> Transversal:
        J = self.system.check_subset(J)
        K = self.system.check_subset(K)
        payloads = [e.payload for e in self._coset_entries(K) if not e.left_descents & J]
        return self._transversal(DOUBLE, J, K, payloads)

    # --------------------------------------------------
    # GROUP ALGEBRA ORACLE
    # --------------------------------------------------

    def x_of(self, J: int) -> GroupAlgebraVector:
        """x_J = sum of X_J inside the group algebra."""
        return {w.payload: Fraction(1) for w in self.min_coset_reps(J)}

    def x_relative_of(self, J: int, K: int) -> GroupAlgebraVector:
        return {w.payload: Fraction(1) for w in self.relative_coset_reps(J, K)}

    def convolve(self, u: Mapping[Payload, Fraction], v: Mapping[Payload, Fraction]) -> GroupAlgebraVector:
        model = self.model
        out: Counter = Counter()
        for a, ca in u.items():
            for b, cb in v.items():
                out[model.multiply(a, b)] += ca * cb
        return {w: c for w, c in out.items() if c}

    def descent_to_group_algebra(self, a: AlgebraElement) -> GroupAlgebraVector:
        self._check(a)
        out: Counter = Counter()
        for mask, c in a.items():
            for w in self._closure(mask, self.full):
                out[w] += c
        return {w: c for w, c in out.items() if c}

    # --------------------------------------------------
    # MULTIPLICATION
    # --------------------------------------------------

    def structure_constants(self, J: int, K: int) -> Dict[int, int]:
        """{L: a_JKL} for the product x_J x_K, keys ascending."""
        J = self.system.check_subset(J)
        K = self.system.check_subset(K)
        cached = self._constants.get((J, K))
        if cached is not None:
            return cached

        counts: Counter = Counter()
        for entry in self._coset_entries(K):
            if entry.left_descents & J:
                continue
            counts[entry.conjugate_mask(J) & K] += 1

        table = dict(sorted(counts.items()))
        self._constants[(J, K)] = table
        self.logger.debug(
            "%s: x_%s x_%s filled (%d terms)", self.system.label, format_subset(J), format_subset(K), len(table)
        )
        return table

    def solomon_product(self, J: int, K: int) -> AlgebraElement:
        return self.element(self.structure_constants(J, K))

    def _check(self, a: AlgebraElement) -> None:
        if a.system_key != self.key:
            raise MixedSystemError(f"element of {a.system_key} used with the descent algebra of {self.key}")

    def product_of_elements(self, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        self._check(a)
        self._check(b)
        out: Dict[int, Fraction] = {}
        for J, ca in a.items():
            for K, cb in b.items():
                weight = ca * cb
                for L, count in self.structure_constants(J, K).items():
                    out[L] = out.get(L, Fraction(0)) + weight * count
        return self.element(out)

    def power(self, a: AlgebraElement, exponent: int) -> AlgebraElement:
        if exponent < 0:
            raise ValueError("negative powers are not defined in the descent algebra")
        result = self.one()
        for _ in range(exponent):
            result = self.product_of_elements(result, a)
        return result

    def evaluate_polynomial(self, coefficients: List[Scalar], a: AlgebraElement) -> AlgebraElement:
        """p(a) for p given by ascending coefficients, by Horner's rule."""
        result = self.zero()
        for c in reversed(coefficients):
            result = self.product_of_elements(result, a) + self.one().scale(c)
        return result

    def commutator(self, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        return self.product_of_elements(a, b) - self.product_of_elements(b, a)

    # --------------------------------------------------
    # FACTORIZATION
    # --------------------------------------------------

    def verify_transversal_factorization(self, J: int, K: int) -> bool:
        """
        Checks X_J = X_K · X_J^(K) with every product distinct, and
        x_J = x_K x_J^(K) in the group algebra.
        """
        J = self.system.check_subset(J)
        K = self.system.check_subset(K)
        if not is_subset(J, K):
            raise SubsetError(f"factorization needs J ⊆ K, got J={format_subset(J)} K={format_subset(K)}")

        model = self.model
        x_j = set(self._closure(J, self.full))
        seen = set()
        for x in self._closure(K, self.full):
            for y in self._closure(J, K):
                w = model.multiply(x, y)
                if w in seen:
                    raise TransversalFactorizationError(
                        f"{self.system.label}: product repeated in X_K · X_J^(K)", self.system.element(w)
                    )
                if w not in x_j:
                    raise TransversalFactorizationError(
                        f"{self.system.label}: product outside X_{format_subset(J)}", self.system.element(w)
                    )
                seen.add(w)
        missing = x_j - seen
        if missing:
            w = min(missing)
            raise TransversalFactorizationError(
                f"{self.system.label}: element of X_{format_subset(J)} not reached", self.system.element(w)
            )

        if self.convolve(self.x_of(K), self.x_relative_of(J, K)) != self.x_of(J):
            raise TransversalFactorizationError(f"{self.system.label}: x_J != x_K x_J^(K)")
        self.logger.debug("%s: factorization of X_%s through K=%s holds", self.system.label, format_subset(J), format_subset(K))
        return True
