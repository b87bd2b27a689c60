from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, List, Mapping, Optional, Union

from coxeter_descent.algebra.descent_algebra import DescentAlgebra
from coxeter_descent.classical.chain_formulas import (
    ChainVector,
    chain_family,
    chain_indices,
    closed_form_product,
    solomon_chain_product,
)
from coxeter_descent.core.coxeter_types import Family
from coxeter_descent.utils.io_utils import dumps_csv


def format_cell(vector: Mapping[int, Fraction]) -> str:
    """Cell text l:coeff;... with l ascending; empty for the zero vector."""
    return ";".join(f"{l}:{c}" for l, c in sorted(vector.items()))


def parse_cell(text: str) -> ChainVector:
    out: ChainVector = {}
    for part in filter(None, text.split(";")):
        l, c = part.split(":")
        out[int(l)] = Fraction(c)
    return out


def _product_function(family: Family, n: int, algebra: Optional[DescentAlgebra]) -> Callable[[int, int], ChainVector]:
    if algebra is None:
        return lambda j, k: closed_form_product(family, n, j, k)
    return lambda j, k: solomon_chain_product(algebra, family, j, k)


def structure_constant_table(
    family: Union[Family, str], n: int, algebra: Optional[DescentAlgebra] = None
) -> Dict[int, Dict[int, ChainVector]]:
    """table[j][k] = x_j x_k in chain coordinates. With an algebra, by Solomon's rule instead of the closed form."""
    family = chain_family(family)
    product = _product_function(family, n, algebra)
    indices = list(chain_indices(family, n))
    return {j: {k: product(j, k) for k in indices} for j in indices}


def structure_constant_rows(
    family: Union[Family, str], n: int, algebra: Optional[DescentAlgebra] = None
) -> List[List[str]]:
    table = structure_constant_table(family, n, algebra)
    return [[str(j)] + [format_cell(cell) for cell in row.values()] for j, row in table.items()]


def structure_constant_csv(
    family: Union[Family, str], n: int, algebra: Optional[DescentAlgebra] = None
) -> str:
    family = chain_family(family)
    header = ["j"] + [str(k) for k in chain_indices(family, n)]
    return dumps_csv(header, structure_constant_rows(family, n, algebra))


def format_terms(vector: Mapping[int, Fraction]) -> str:
    """2*x_0 + x_1 style; 0 for the zero vector."""
    parts = []
    for l, c in sorted(vector.items()):
        parts.append(f"x_{l}" if c == 1 else f"{c}*x_{l}")
    return " + ".join(parts).replace("+ -", "- ") if parts else "0"
