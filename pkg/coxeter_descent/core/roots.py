from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple, Union

from coxeter_descent.core.errors import ConstructionError
from coxeter_descent.core.scalars import GOLDEN_RATIO, QSqrt5

Scalar = Union[int, QSqrt5]
Vector = Tuple[Scalar, ...]

ROOT_MODEL_BOND_ORDERS = {2, 3, 4, 5, 6}


def cartan_matrix(coxeter: Sequence[Sequence[int]]) -> List[List[Scalar]]:
    """
    Cartan-type matrix A with s_i(alpha_j) = alpha_j - A[i][j] alpha_i.

    Crystallographic bonds get integer entries (the longer root first for
    m = 4, 6); bonds with m = 5 make the whole matrix symmetric over Q(sqrt 5).
    """
    n = len(coxeter)
    bonds = {coxeter[i][j] for i in range(n) for j in range(n) if i != j}
    unsupported = bonds - ROOT_MODEL_BOND_ORDERS
    if unsupported:
        raise ConstructionError(f"No exact root model for bond orders {sorted(unsupported)}")

    if 5 in bonds:
        if bonds & {4, 6}:
            raise ConstructionError("Mixed bond orders 5 and 4/6 have no finite root model")
        entry = {2: QSqrt5(0), 3: QSqrt5(-1), 5: -GOLDEN_RATIO}
        return [[QSqrt5(2) if i == j else entry[coxeter[i][j]] for j in range(n)] for i in range(n)]

    a: List[List[Scalar]] = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            m = coxeter[i][j]
            if m == 3:
                a[i][j] = a[j][i] = -1
            elif m == 4:
                a[i][j], a[j][i] = -1, -2
            elif m == 6:
                a[i][j], a[j][i] = -1, -3
    return a


def _reflect(vec: Vector, i: int, cartan: List[List[Scalar]]) -> Vector:
    coefficient = sum((vec[j] * cartan[i][j] for j in range(len(vec))), cartan[i][i] * 0)
    if coefficient == 0:
        return vec
    out = list(vec)
    out[i] = out[i] - coefficient
    return tuple(out)


def _is_positive(vec: Vector) -> bool:
    for c in vec:
        if c != 0:
            return c > 0
    raise ConstructionError("zero vector in root system")


@dataclass(frozen=True, eq=False)
class RootSystem:
    """
    Roots in simple-root coordinates. Indices 0..N-1 are the positive roots in
    discovery order (simple roots first), N..2N-1 their negatives in the same order.
    """

    cartan: Tuple[Tuple[Scalar, ...], ...]
    roots: Tuple[Vector, ...]
    index: Dict[Vector, int]
    generator_images: Tuple[Tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def positive_count(self) -> int:
        return len(self.roots) // 2

    def negate(self, r: int) -> int:
        n = self.positive_count
        return r + n if r < n else r - n

    def is_positive(self, r: int) -> bool:
        return r < self.positive_count


def build_root_system(coxeter: Sequence[Sequence[int]]) -> RootSystem:
    cartan = cartan_matrix(coxeter)
    n = len(cartan)
    one = cartan[0][0] * 0 + 1
    zero = cartan[0][0] * 0
    simple = [tuple(one if j == i else zero for j in range(n)) for i in range(n)]

    seen: Dict[Vector, None] = {}
    queue = deque(simple)
    for v in simple:
        seen[v] = None
    while queue:
        v = queue.popleft()
        for i in range(n):
            w = _reflect(v, i, cartan)
            if w not in seen:
                seen[w] = None
                queue.append(w)

    positives = [v for v in seen if _is_positive(v)]
    if len(positives) * 2 != len(seen):
        raise ConstructionError("root closure is not symmetric; Coxeter matrix is not of finite type")
    roots = tuple(positives) + tuple(tuple(-c for c in v) for v in positives)
    index = {v: k for k, v in enumerate(roots)}

    images = []
    for i in range(n):
        images.append(tuple(index[_reflect(v, i, cartan)] for v in roots))

    return RootSystem(
        cartan=tuple(tuple(row) for row in cartan),
        roots=roots,
        index=index,
        generator_images=tuple(images),
    )
