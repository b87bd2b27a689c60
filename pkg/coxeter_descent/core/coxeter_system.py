from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from coxeter_descent.core.coxeter_types import (
    CoxeterType,
    Family,
    component_types,
    coxeter_matrix,
    group_order,
    parse_type_spec,
)
from coxeter_descent.core.element_models import (
    DihedralModel,
    ElementModel,
    Payload,
    PermutationModel,
    RootModel,
    SignedPermutationModel,
)
from coxeter_descent.core.errors import (
    ConstructionError,
    EnumerationCapError,
    GeneratorIndexError,
    MixedSystemError,
    SubsetError,
)
from coxeter_descent.core.roots import build_root_system
from coxeter_descent.core.subsets import SubsetMask, bit_indices, format_subset, is_subset
from coxeter_descent.utils.config import default_enumeration_cap
from coxeter_descent.utils.logging_utils import setup_logger


@dataclass(frozen=True)
class GroupElement:
    system_key: str
    payload: Payload
    system: "CoxeterSystem" = field(compare=False, repr=False)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return self.system.multiply(self, other)

    @property
    def length(self) -> int:
        return self.system.length(self)

    def inverse(self) -> "GroupElement":
        return self.system.inverse(self)

    def word(self) -> Tuple[int, ...]:
        return self.system.reduced_word(self)

    def sort_key(self) -> Tuple[int, Payload]:
        return (self.system.model.length(self.payload), self.payload)

    def __str__(self) -> str:
        return format_word(self.word())


def parse_word(text: str) -> Tuple[int, ...]:
    """'2 1 3 2' -> (2, 1, 3, 2); the empty string is the identity."""
    cleaned = text.strip()
    if not cleaned or cleaned in ("e", "()"):
        return ()
    try:
        return tuple(int(part) for part in cleaned.replace(",", " ").split())
    except ValueError as e:
        raise GeneratorIndexError(f"malformed word {text!r}; expected e.g. '2 1 3 2'") from e


def format_word(word: Sequence[int]) -> str:
    return " ".join(str(i) for i in word)


class CoxeterSystem:
    """
    A finite Coxeter system with a chosen faithful element model.

    Generator indices in this API are 1-based (s_1..s_n); subsets are
    bitmasks with bit i for s_{i+1}.
    """

    def __init__(self, ctype: CoxeterType, model: ElementModel, enumeration_cap: int) -> None:
        self.ctype = ctype
        self.coxeter_matrix = coxeter_matrix(ctype)
        self.model = model
        self.group_order = group_order(ctype)
        self.enumeration_cap = enumeration_cap
        self.key = f"{ctype.label}/{model.kind}"
        self.logger = setup_logger("core.system")
        self._identity = self.element(model.identity())
        self._longest_cache: dict = {}

    @property
    def rank(self) -> int:
        return self.ctype.rank

    @property
    def label(self) -> str:
        return self.ctype.label

    @property
    def enumerable(self) -> bool:
        return self.group_order <= self.enumeration_cap

    def __repr__(self) -> str:
        return f"CoxeterSystem({self.key}, order={self.group_order})"

    # --------------------------------------------------
    # ELEMENTS
    # --------------------------------------------------

    def element(self, payload: Payload) -> GroupElement:
        return GroupElement(self.key, tuple(payload), self)

    def identity(self) -> GroupElement:
        return self._identity

    def _bit(self, i: int) -> int:
        if not 1 <= i <= self.rank:
            raise GeneratorIndexError(f"generator index {i} outside 1..{self.rank} for {self.label}")
        return i - 1

    def generator(self, i: int) -> GroupElement:
        return self.element(self.model.generator(self._bit(i)))

    def generators(self) -> List[GroupElement]:
        return [self.element(g) for g in self.model.generators]

    def _check(self, *elements: GroupElement) -> None:
        for w in elements:
            if w.system_key != self.key:
                raise MixedSystemError(f"element of {w.system_key} used with system {self.key}")

    def multiply(self, a: GroupElement, b: GroupElement) -> GroupElement:
        self._check(a, b)
        return self.element(self.model.multiply(a.payload, b.payload))

    def inverse(self, a: GroupElement) -> GroupElement:
        self._check(a)
        return self.element(self.model.inverse(a.payload))

    def length(self, a: GroupElement) -> int:
        self._check(a)
        return self.model.length(a.payload)

    def has_right_ascent(self, w: GroupElement, i: int) -> bool:
        self._check(w)
        return self.model.has_right_ascent(w.payload, self._bit(i))

    def has_left_ascent(self, w: GroupElement, i: int) -> bool:
        self._check(w)
        return self.model.has_left_ascent(w.payload, self._bit(i))

    def product(self, elements: Sequence[GroupElement]) -> GroupElement:
        payload = self.model.identity()
        for w in elements:
            self._check(w)
            payload = self.model.multiply(payload, w.payload)
        return self.element(payload)

    def element_from_word(self, word: Union[str, Sequence[int]]) -> GroupElement:
        indices = parse_word(word) if isinstance(word, str) else tuple(word)
        payload = self.model.identity()
        for i in indices:
            payload = self.model.multiply(payload, self.model.generator(self._bit(i)))
        return self.element(payload)

    def reduced_word(self, w: GroupElement) -> Tuple[int, ...]:
        """Reduced word read off by peeling the smallest right descent."""
        self._check(w)
        model = self.model
        payload = w.payload
        identity = model.identity()
        peeled: List[int] = []
        while payload != identity:
            for i in range(self.rank):
                if not model.has_right_ascent(payload, i):
                    payload = model.multiply(payload, model.generator(i))
                    peeled.append(i + 1)
                    break
            else:
                raise ConstructionError("non-identity element without right descent")
        return tuple(reversed(peeled))

    def conjugate(self, d: GroupElement, i: int) -> Optional[int]:
        """j with d^-1 s_i d = s_j (1-based), or None if the conjugate is not simple."""
        self._check(d)
        j = self.model.conjugate_to_simple(self.model.inverse(d.payload), d.payload, self._bit(i))
        return None if j is None else j + 1

    def conjugate_subset(self, J: int, d: GroupElement, K: Optional[int] = None) -> SubsetMask:
        """J^d ∩ K, where J^d = {d^-1 s d : s in J} read as simple reflections."""
        self._check(d)
        return conjugate_subset_payload(self.model, J, d.payload, self.model.inverse(d.payload), K)

    # --------------------------------------------------
    # SUBSETS AND PARABOLICS
    # --------------------------------------------------

    def check_subset(self, J: int) -> SubsetMask:
        if J < 0 or J >> self.rank:
            raise SubsetError(f"subset bitmask {J} outside rank {self.rank}")
        return SubsetMask(J)

    def longest_element(self, K: int) -> GroupElement:
        """
        w_K by greedy ascent inside W_K; never enumerates the group.
        """
        K = self.check_subset(K)
        if K in self._longest_cache:
            return self._longest_cache[K]
        model = self.model
        payload = model.identity()
        bits = list(bit_indices(K))
        climbing = True
        while climbing:
            climbing = False
            for i in bits:
                if model.has_right_ascent(payload, i):
                    payload = model.multiply(payload, model.generator(i))
                    climbing = True
                    break
        w = self.element(payload)
        self._longest_cache[K] = w
        return w

    def coset_rep_d(self, J: int, K: int) -> GroupElement:
        """d_J^K = w_J w_K, the longest right coset representative of W_J in W_K."""
        J = self.check_subset(J)
        K = self.check_subset(K)
        if not is_subset(J, K):
            raise SubsetError(f"d_J^K needs J ⊆ K, got J={format_subset(J)} K={format_subset(K)}")
        return self.multiply(self.longest_element(J), self.longest_element(K))

    def parabolic_elements(self, K: int) -> List[GroupElement]:
        """All of W_K in (length, payload) order."""
        K = self.check_subset(K)
        size = self.parabolic_order(K)
        if size > self.enumeration_cap:
            raise EnumerationCapError("W_" + format_subset(K), size, self.enumeration_cap)
        return [self.element(p) for p in self._layered_closure(list(bit_indices(K)), "W_" + format_subset(K))]

    def parabolic_types(self, K: int) -> List[CoxeterType]:
        K = self.check_subset(K)
        return component_types(self.coxeter_matrix, list(bit_indices(K)))

    def parabolic_order(self, K: int) -> int:
        """|W_K| from the component types of K; never enumerates."""
        return math.prod(group_order(t) for t in self.parabolic_types(K))

    # --------------------------------------------------
    # ENUMERATION
    # --------------------------------------------------

    def enumerate_group(self) -> Iterator[GroupElement]:
        if not self.enumerable:
            raise EnumerationCapError(self.label, self.group_order, self.enumeration_cap)
        for payload in self._layered_closure(list(range(self.rank)), self.label):
            yield self.element(payload)

    def _layered_closure(self, bits: List[int], what: str) -> Iterator[Payload]:
        model = self.model
        level = [model.identity()]
        count = 0
        while level:
            count += len(level)
            if count > self.enumeration_cap:
                raise EnumerationCapError(what, count, self.enumeration_cap)
            for payload in level:
                yield payload
            successors = set()
            for payload in level:
                for i in bits:
                    if model.has_right_ascent(payload, i):
                        successors.add(model.multiply(payload, model.generator(i)))
            level = sorted(successors)
        self.logger.debug("enumerated %d elements of %s", count, what)


def conjugate_subset_payload(
    model: ElementModel, J: int, d: Payload, d_inv: Payload, K: Optional[int] = None
) -> SubsetMask:
    out = 0
    for i in bit_indices(J):
        j = model.conjugate_to_simple(d_inv, d, i)
        if j is not None:
            out |= 1 << j
    if K is not None:
        out &= K
    return SubsetMask(out)


def build_system(
    ctype: Union[CoxeterType, str],
    model: Optional[str] = None,
    enumeration_cap: Optional[int] = None,
) -> CoxeterSystem:
    """
    Builds a Coxeter system. `model` is None (the natural model for the
    type) or "root" to force the exact root-permutation model.
    """
    if isinstance(ctype, str):
        ctype = parse_type_spec(ctype)
    cap = default_enumeration_cap() if enumeration_cap is None else enumeration_cap

    if model not in (None, "root"):
        raise ConstructionError(f"unknown element model {model!r}; use None or 'root'")

    family = ctype.family
    element_model: ElementModel
    if model == "root":
        element_model = RootModel(build_root_system(coxeter_matrix(ctype)))
    elif family is Family.A:
        element_model = PermutationModel(ctype.rank)
    elif family is Family.B:
        element_model = SignedPermutationModel(ctype.rank, even=False)
    elif family is Family.D:
        element_model = SignedPermutationModel(ctype.rank, even=True)
    elif family is Family.I2:
        element_model = DihedralModel(ctype.dihedral_m)
    else:
        element_model = RootModel(build_root_system(coxeter_matrix(ctype)))

    return CoxeterSystem(ctype, element_model, cap)
