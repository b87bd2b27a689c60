from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Dict, List, Optional, Tuple

from coxeter_descent.core.roots import RootSystem

Payload = Tuple[int, ...]


class ElementModel(ABC):
    """
    Faithful representation of a finite Coxeter group on hashable tuples.

    Generator indices are 0-based here; the public API is 1-based.
    Products are compositions of maps: (a * b)(x) = a(b(x)).
    """

    kind: str = ""

    def __init__(self, rank: int) -> None:
        self.rank = rank
        self._generators: List[Payload] = []
        self._simple_lookup: Optional[Dict[Payload, int]] = None

    # --------------------------------------------------
    # ABSTRACT METHODS
    # --------------------------------------------------

    @abstractmethod
    def identity(self) -> Payload:
        ...

    @abstractmethod
    def multiply(self, a: Payload, b: Payload) -> Payload:
        ...

    @abstractmethod
    def inverse(self, a: Payload) -> Payload:
        ...

    @abstractmethod
    def length(self, a: Payload) -> int:
        ...

    @abstractmethod
    def has_right_ascent(self, a: Payload, i: int) -> bool:
        ...

    # --------------------------------------------------
    # SHARED HELPERS
    # --------------------------------------------------

    def generator(self, i: int) -> Payload:
        return self._generators[i]

    @property
    def generators(self) -> List[Payload]:
        return list(self._generators)

    def has_left_ascent(self, a: Payload, i: int) -> bool:
        return self.has_right_ascent(self.inverse(a), i)

    def simple_index(self, a: Payload) -> Optional[int]:
        if self._simple_lookup is None:
            self._simple_lookup = {g: i for i, g in enumerate(self._generators)}
        return self._simple_lookup.get(a)

    def conjugate_to_simple(self, a_inv: Payload, a: Payload, i: int) -> Optional[int]:
        """j with a^-1 s_i a = s_j, or None when the conjugate is not simple."""
        return self.simple_index(self.multiply(self.multiply(a_inv, self._generators[i]), a))

    def format_payload(self, a: Payload) -> str:
        return "[" + ", ".join(str(x) for x in a) + "]"


class PermutationModel(ElementModel):
    """Type A_n as permutations of {1..n+1} in one-line notation."""

    kind = "permutation"

    def __init__(self, rank: int) -> None:
        super().__init__(rank)
        degree = rank + 1
        for i in range(rank):
            images = list(range(1, degree + 1))
            images[i], images[i + 1] = images[i + 1], images[i]
            self._generators.append(tuple(images))

    def identity(self) -> Payload:
        return tuple(range(1, self.rank + 2))

    def multiply(self, a: Payload, b: Payload) -> Payload:
        return tuple(a[x - 1] for x in b)

    def inverse(self, a: Payload) -> Payload:
        out = [0] * len(a)
        for position, value in enumerate(a, start=1):
            out[value - 1] = position
        return tuple(out)

    def length(self, a: Payload) -> int:
        n = len(a)
        return sum(1 for i in range(n) for j in range(i + 1, n) if a[i] > a[j])

    def has_right_ascent(self, a: Payload, i: int) -> bool:
        return a[i] < a[i + 1]

    def has_left_ascent(self, a: Payload, i: int) -> bool:
        return a.index(i + 1) < a.index(i + 2)


class SignedPermutationModel(ElementModel):
    """
    Types B_n and D_n as signed permutations w of {±1..±n}, stored as
    (w(1), ..., w(n)) with w(-i) = -w(i).

    B_n: s_1 = (-1,1), s_i = (i-1,i)(-i+1,-i) for i >= 2.
    D_n: s_1 = (-2,1)(-1,2), s_i as for B_n.
    """

    def __init__(self, rank: int, even: bool = False) -> None:
        super().__init__(rank)
        self.even = even
        self.kind = "even_signed_permutation" if even else "signed_permutation"
        first = list(range(1, rank + 1))
        if even:
            first[0], first[1] = -2, -1
        else:
            first[0] = -1
        self._generators.append(tuple(first))
        for i in range(1, rank):
            images = list(range(1, rank + 1))
            images[i - 1], images[i] = images[i], images[i - 1]
            self._generators.append(tuple(images))

    def identity(self) -> Payload:
        return tuple(range(1, self.rank + 1))

    def multiply(self, a: Payload, b: Payload) -> Payload:
        return tuple(a[x - 1] if x > 0 else -a[-x - 1] for x in b)

    def inverse(self, a: Payload) -> Payload:
        out = [0] * len(a)
        for position, value in enumerate(a, start=1):
            if value > 0:
                out[value - 1] = position
            else:
                out[-value - 1] = -position
        return tuple(out)

    def length(self, a: Payload) -> int:
        n = len(a)
        inversions = 0
        negative_sums = 0
        for i in range(n):
            for j in range(i + 1, n):
                if a[i] > a[j]:
                    inversions += 1
                if a[i] + a[j] < 0:
                    negative_sums += 1
        if self.even:
            return inversions + negative_sums
        negatives = sum(1 for x in a if x < 0)
        return inversions + negative_sums + negatives

    def has_right_ascent(self, a: Payload, i: int) -> bool:
        if i == 0:
            return a[0] + a[1] > 0 if self.even else a[0] > 0
        return a[i - 1] < a[i]


class DihedralModel(ElementModel):
    """
    I2(m) as pairs (r, f) meaning rho^r sigma^f, with s_1 = sigma and
    s_2 = rho sigma, so rho = s_2 s_1.
    """

    kind = "dihedral"

    def __init__(self, m: int) -> None:
        super().__init__(2)
        self.m = m
        self._generators = [(0, 1), (1, 1)]

    def identity(self) -> Payload:
        return (0, 0)

    def multiply(self, a: Payload, b: Payload) -> Payload:
        r1, f1 = a
        r2, f2 = b
        r = (r1 - r2) if f1 else (r1 + r2)
        return (r % self.m, f1 ^ f2)

    def inverse(self, a: Payload) -> Payload:
        r, f = a
        if f:
            return a
        return ((-r) % self.m, 0)

    def length(self, a: Payload) -> int:
        r, f = a
        m = self.m
        if not f:
            return 2 * min(r, m - r)
        if r == 0:
            return 1
        return min(2 * r - 1, 2 * (m - r) + 1)

    def has_right_ascent(self, a: Payload, i: int) -> bool:
        return self.length(self.multiply(a, self._generators[i])) > self.length(a)

    def has_left_ascent(self, a: Payload, i: int) -> bool:
        return self.length(self.multiply(self._generators[i], a)) > self.length(a)

    def format_payload(self, a: Payload) -> str:
        r, f = a
        return f"(rotation={r}, reflected={bool(f)})"


class RootModel(ElementModel):
    """
    Elements as permutations of the root index set of an exact root system;
    w(alpha_i) > 0 decides right ascents.
    """

    kind = "root"

    def __init__(self, roots: RootSystem) -> None:
        super().__init__(roots.rank)
        self.roots = roots
        self._positive = roots.positive_count
        self._generators = list(roots.generator_images)

    def identity(self) -> Payload:
        return tuple(range(len(self.roots.roots)))

    def multiply(self, a: Payload, b: Payload) -> Payload:
        return tuple(a[x] for x in b)

    def inverse(self, a: Payload) -> Payload:
        out = [0] * len(a)
        for k, v in enumerate(a):
            out[v] = k
        return tuple(out)

    def length(self, a: Payload) -> int:
        n = self._positive
        return sum(1 for r in range(n) if a[r] >= n)

    def has_right_ascent(self, a: Payload, i: int) -> bool:
        return a[i] < self._positive

    def has_left_ascent(self, a: Payload, i: int) -> bool:
        return a.index(i) < self._positive

    def conjugate_to_simple(self, a_inv: Payload, a: Payload, i: int) -> Optional[int]:
        # a^-1 s_i a is the reflection along a^-1(alpha_i)
        r = a_inv[i]
        if r < self.rank:
            return r
        r = self.roots.negate(r)
        return r if r < self.rank else None

    def format_payload(self, a: Payload) -> str:
        return f"<permutation of {len(a)} roots>"
