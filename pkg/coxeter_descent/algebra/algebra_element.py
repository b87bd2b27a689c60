from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Optional, Tuple, Union

from coxeter_descent.core.errors import MixedSystemError, SubsetError
from coxeter_descent.core.subsets import format_subset, full_mask, parse_subset

Scalar = Union[int, Fraction]


def format_rational(value: Fraction) -> str:
    return str(Fraction(value))


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"malformed rational {text!r}") from e


class AlgebraElement:
    """
    Sparse exact-rational combination of the basis elements x_J of the
    descent algebra, keyed by subset bitmask. Zero coefficients are never stored.
    """

    __slots__ = ("system_key", "rank", "_coeffs")

    def __init__(
        self,
        system_key: str,
        rank: int,
        coeffs: Optional[Mapping[int, Scalar]] = None,
    ) -> None:
        self.system_key = system_key
        self.rank = rank
        limit = 1 << rank
        cleaned: Dict[int, Fraction] = {}
        for mask, value in (coeffs or {}).items():
            if not 0 <= mask < limit:
                raise SubsetError(f"subset bitmask {mask} outside rank {rank}")
            value = Fraction(value)
            if value:
                cleaned[mask] = value
        self._coeffs = dict(sorted(cleaned.items()))

    # --------------------------------------------------
    # CONSTRUCTORS
    # --------------------------------------------------

    @classmethod
    def basis(cls, system_key: str, rank: int, mask: int, coefficient: Scalar = 1) -> "AlgebraElement":
        return cls(system_key, rank, {mask: coefficient})

    @classmethod
    def zero(cls, system_key: str, rank: int) -> "AlgebraElement":
        return cls(system_key, rank)

    @classmethod
    def one(cls, system_key: str, rank: int) -> "AlgebraElement":
        """x_S, the identity of the descent algebra."""
        return cls(system_key, rank, {full_mask(rank): 1})

    # --------------------------------------------------
    # ACCESS
    # --------------------------------------------------

    def coefficient(self, mask: int) -> Fraction:
        return self._coeffs.get(mask, Fraction(0))

    def __getitem__(self, mask: int) -> Fraction:
        return self.coefficient(mask)

    def items(self) -> List[Tuple[int, Fraction]]:
        return list(self._coeffs.items())

    def __iter__(self) -> Iterator[int]:
        return iter(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def support(self) -> List[int]:
        return list(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._coeffs.values())

    def as_dict(self) -> Dict[int, Fraction]:
        return dict(self._coeffs)

    # --------------------------------------------------
    # ARITHMETIC
    # --------------------------------------------------

    def _check(self, other: "AlgebraElement") -> None:
        if other.system_key != self.system_key:
            raise MixedSystemError(
                f"cannot combine elements of {self.system_key} and {other.system_key}"
            )

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        merged = dict(self._coeffs)
        for mask, value in other._coeffs.items():
            merged[mask] = merged.get(mask, Fraction(0)) + value
        return AlgebraElement(self.system_key, self.rank, merged)

    def __neg__(self) -> "AlgebraElement":
        return self.scale(-1)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: Scalar) -> "AlgebraElement":
        factor = Fraction(factor)
        return AlgebraElement(
            self.system_key, self.rank, {m: c * factor for m, c in self._coeffs.items()}
        )

    def __mul__(self, factor: Scalar) -> "AlgebraElement":
        # algebra products need structure constants; see DescentAlgebra.product_of_elements
        if isinstance(factor, AlgebraElement):
            return NotImplemented
        return self.scale(factor)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.system_key == other.system_key and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.system_key, tuple(self._coeffs.items())))

    # --------------------------------------------------
    # SERIALIZATION
    # --------------------------------------------------

    def to_json(self) -> Dict[str, str]:
        return {format_subset(mask): format_rational(c) for mask, c in self._coeffs.items()}

    @classmethod
    def from_json(cls, system_key: str, rank: int, data: Mapping[str, str]) -> "AlgebraElement":
        return cls(
            system_key,
            rank,
            {parse_subset(key, rank): parse_rational(str(value)) for key, value in data.items()},
        )

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for mask, c in self._coeffs.items():
            name = f"x[{format_subset(mask)}]"
            if c == 1:
                parts.append(name)
            elif c == -1:
                parts.append(f"-{name}")
            else:
                parts.append(f"{c}*{name}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"AlgebraElement({self.system_key}, {self.to_json()})"