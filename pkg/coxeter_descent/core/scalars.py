from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Union

Rational = Union[int, Q]


@dataclass(frozen=True)
class QSqrt5:
    """
    Exact element a + b*sqrt(5) of Q(sqrt 5), enough to hold the
    golden-ratio root coordinates of H3 and H4.
    """

    a: Q = Q(0)
    b: Q = Q(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Q(self.a))
        object.__setattr__(self, "b", Q(self.b))

    @staticmethod
    def coerce(value: Union["QSqrt5", Rational]) -> "QSqrt5":
        if isinstance(value, QSqrt5):
            return value
        return QSqrt5(Q(value), Q(0))

    def __add__(self, other: Union["QSqrt5", Rational]) -> "QSqrt5":
        o = QSqrt5.coerce(other)
        return QSqrt5(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> "QSqrt5":
        return QSqrt5(-self.a, -self.b)

    def __sub__(self, other: Union["QSqrt5", Rational]) -> "QSqrt5":
        return self + (-QSqrt5.coerce(other))

    def __rsub__(self, other: Rational) -> "QSqrt5":
        return QSqrt5.coerce(other) - self

    def __mul__(self, other: Union["QSqrt5", Rational]) -> "QSqrt5":
        o = QSqrt5.coerce(other)
        return QSqrt5(self.a * o.a + 5 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def sign(self) -> int:
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if (a > 0) == (b > 0):
            return 1 if a > 0 else -1
        # opposite signs: compare a^2 with 5 b^2
        dominant = a * a - 5 * b * b
        if dominant == 0:
            return 0
        if dominant > 0:
            return 1 if a > 0 else -1
        return 1 if b > 0 else -1

    def __lt__(self, other: Union["QSqrt5", Rational]) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other: Union["QSqrt5", Rational]) -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other: Union["QSqrt5", Rational]) -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other: Union["QSqrt5", Rational]) -> bool:
        return (self - other).sign() >= 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QSqrt5):
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Q)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*sqrt5"
        return f"{self.a}{'+' if self.b > 0 else '-'}{abs(self.b)}*sqrt5"


# 2cos(pi/5), the golden ratio
GOLDEN_RATIO = QSqrt5(Q(1, 2), Q(1, 2))
