from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple

from coxeter_descent.core.errors import ConstructionError


class Family(str, Enum):
    A = "A"
    B = "B"
    D = "D"
    I2 = "I2"
    H3 = "H3"
    H4 = "H4"
    F4 = "F4"
    E6 = "E6"
    E7 = "E7"
    E8 = "E8"


CLASSICAL_FAMILIES = (Family.A, Family.B, Family.D)

FIXED_RANKS: Dict[Family, int] = {
    Family.H3: 3,
    Family.H4: 4,
    Family.F4: 4,
    Family.E6: 6,
    Family.E7: 7,
    Family.E8: 8,
}

MIN_CLASSICAL_RANK: Dict[Family, int] = {Family.A: 1, Family.B: 2, Family.D: 3}

EXCEPTIONAL_ORDERS: Dict[Family, int] = {
    Family.H3: 120,
    Family.H4: 14400,
    Family.F4: 1152,
    Family.E6: 51840,
    Family.E7: 2903040,
    Family.E8: 696729600,
}

# edges (i, j, m) of the diagrams, 1-based; chain labelling for
# A/B/D and Bourbaki-style for the exceptional types
_EXCEPTIONAL_EDGES: Dict[Family, List[Tuple[int, int, int]]] = {
    Family.H3: [(1, 2, 5), (2, 3, 3)],
    Family.H4: [(1, 2, 5), (2, 3, 3), (3, 4, 3)],
    Family.F4: [(1, 2, 3), (2, 3, 4), (3, 4, 3)],
    Family.E6: [(1, 3, 3), (2, 4, 3), (3, 4, 3), (4, 5, 3), (5, 6, 3)],
    Family.E7: [(1, 3, 3), (2, 4, 3), (3, 4, 3), (4, 5, 3), (5, 6, 3), (6, 7, 3)],
    Family.E8: [(1, 3, 3), (2, 4, 3), (3, 4, 3), (4, 5, 3), (5, 6, 3), (6, 7, 3), (7, 8, 3)],
}

_SPEC_RE = re.compile(r"^(?:(I2)\s*[:(]\s*(\d+)\s*\)?|([ABD])(\d+)|(H3|H4|F4|E6|E7|E8))$")


@dataclass(frozen=True)
class CoxeterType:
    family: Family
    rank: int
    dihedral_m: Optional[int] = None

    def __post_init__(self) -> None:
        family = self.family
        if family in CLASSICAL_FAMILIES:
            minimum = MIN_CLASSICAL_RANK[family]
            if self.rank < minimum:
                raise ConstructionError(
                    f"{family.value} requires rank >= {minimum}, got rank {self.rank}"
                )
            if self.dihedral_m is not None:
                raise ConstructionError("dihedral_m is only valid for I2")
        elif family is Family.I2:
            if self.rank != 2:
                raise ConstructionError(f"I2 has rank 2, got rank {self.rank}")
            if self.dihedral_m is None or self.dihedral_m < 3:
                raise ConstructionError(f"I2 requires m >= 3, got m = {self.dihedral_m}")
        else:
            expected = FIXED_RANKS[family]
            if self.rank != expected:
                raise ConstructionError(f"{family.value} has rank {expected}, got rank {self.rank}")
            if self.dihedral_m is not None:
                raise ConstructionError("dihedral_m is only valid for I2")

    @property
    def label(self) -> str:
        if self.family is Family.I2:
            return f"I2:{self.dihedral_m}"
        if self.family in CLASSICAL_FAMILIES:
            return f"{self.family.value}{self.rank}"
        return self.family.value

    @property
    def is_classical(self) -> bool:
        return self.family in CLASSICAL_FAMILIES

    def alternate_labels(self) -> List[str]:
        """Other names of the same Coxeter system (A2 = I2:3, B2 = I2:4, A3 = D3)."""
        aliases = {
            "A2": ["I2:3"],
            "I2:3": ["A2"],
            "B2": ["I2:4"],
            "I2:4": ["B2"],
            "A3": ["D3"],
            "D3": ["A3"],
        }
        return list(aliases.get(self.label, []))

    def __str__(self) -> str:
        return self.label


def parse_type_spec(spec: str) -> CoxeterType:
    """
    Parses "A5", "B3", "D4", "I2:7" (also "I2(7)"), "H3", "H4", "F4", "E6".."E8".
    """
    cleaned = spec.strip().upper()
    match = _SPEC_RE.match(cleaned)
    if not match:
        raise ConstructionError(
            f"Unrecognised type spec {spec!r}; expected e.g. A5, B3, D4, I2:7, H3, F4, E6"
        )
    if match.group(1):
        return CoxeterType(Family.I2, 2, int(match.group(2)))
    if match.group(3):
        return CoxeterType(Family(match.group(3)), int(match.group(4)))
    family = Family(match.group(5))
    return CoxeterType(family, FIXED_RANKS[family])


def coxeter_matrix(ctype: CoxeterType) -> Tuple[Tuple[int, ...], ...]:
    n = ctype.rank
    m = [[1 if i == j else 2 for j in range(n)] for i in range(n)]

    def edge(i: int, j: int, value: int) -> None:
        m[i - 1][j - 1] = value
        m[j - 1][i - 1] = value

    family = ctype.family
    if family is Family.A:
        for i in range(1, n):
            edge(i, i + 1, 3)
    elif family is Family.B:
        edge(1, 2, 4)
        for i in range(2, n):
            edge(i, i + 1, 3)
    elif family is Family.D:
        # s1 and s2 both hang off s3
        edge(1, 3, 3)
        edge(2, 3, 3)
        for i in range(3, n):
            edge(i, i + 1, 3)
    elif family is Family.I2:
        edge(1, 2, ctype.dihedral_m)
    else:
        for i, j, value in _EXCEPTIONAL_EDGES[family]:
            edge(i, j, value)

    return tuple(tuple(row) for row in m)


def group_order(ctype: CoxeterType) -> int:
    n = ctype.rank
    family = ctype.family
    if family is Family.A:
        return math.factorial(n + 1)
    if family is Family.B:
        return 2**n * math.factorial(n)
    if family is Family.D:
        return 2 ** (n - 1) * math.factorial(n)
    if family is Family.I2:
        return 2 * ctype.dihedral_m
    return EXCEPTIONAL_ORDERS[family]


def number_of_reflections(ctype: CoxeterType) -> int:
    """Number of positive roots, i.e. the length of the longest element."""
    n = ctype.rank
    family = ctype.family
    if family is Family.A:
        return n * (n + 1) // 2
    if family is Family.B:
        return n * n
    if family is Family.D:
        return n * (n - 1)
    if family is Family.I2:
        return ctype.dihedral_m
    return {
        Family.H3: 15,
        Family.H4: 60,
        Family.F4: 24,
        Family.E6: 36,
        Family.E7: 63,
        Family.E8: 120,
    }[family]


def component_types(matrix: Tuple[Tuple[int, ...], ...], nodes: List[int]) -> List[CoxeterType]:
    """
    Types of the connected components of the diagram restricted to `nodes`
    (0-based). Components come back in order of their smallest node.
    """
    remaining = sorted(set(nodes))
    types: List[CoxeterType] = []
    while remaining:
        component = {remaining[0]}
        frontier = [remaining[0]]
        while frontier:
            i = frontier.pop()
            for j in remaining:
                if j not in component and matrix[i][j] >= 3:
                    component.add(j)
                    frontier.append(j)
        types.append(_classify_component(matrix, sorted(component)))
        remaining = [i for i in remaining if i not in component]
    return types


def _classify_component(matrix: Tuple[Tuple[int, ...], ...], nodes: List[int]) -> CoxeterType:
    n = len(nodes)
    if n == 1:
        return CoxeterType(Family.A, 1)
    edges = [(i, j, matrix[i][j]) for a, i in enumerate(nodes) for j in nodes[a + 1 :] if matrix[i][j] >= 3]
    if n == 2:
        m = edges[0][2]
        if m == 3:
            return CoxeterType(Family.A, 2)
        if m == 4:
            return CoxeterType(Family.B, 2)
        return CoxeterType(Family.I2, 2, m)

    neighbours: Dict[int, List[int]] = {i: [] for i in nodes}
    for i, j, _ in edges:
        neighbours[i].append(j)
        neighbours[j].append(i)
    labels = [m for _, _, m in edges]

    branch = [i for i in nodes if len(neighbours[i]) == 3]
    if branch:
        centre = branch[0]
        arms = sorted(_arm_length(neighbours, centre, start) for start in neighbours[centre])
        if arms[0] == 1 and arms[1] == 1:
            return CoxeterType(Family.D, n)
        return CoxeterType(Family(f"E{n}"), n)
    if 5 in labels:
        return CoxeterType(Family.H3 if n == 3 else Family.H4, n)
    if 4 in labels:
        i, j, _ = next(edge for edge in edges if edge[2] == 4)
        if len(neighbours[i]) == 1 or len(neighbours[j]) == 1:
            return CoxeterType(Family.B, n)
        return CoxeterType(Family.F4, 4)
    return CoxeterType(Family.A, n)


def _arm_length(neighbours: Dict[int, List[int]], centre: int, start: int) -> int:
    length, previous, current = 1, centre, start
    while True:
        onward = [k for k in neighbours[current] if k != previous]
        if not onward:
            return length
        previous, current = current, onward[0]
        length += 1
