from math import factorial

import pytest

from coxeter_descent.algebra.polynomials import QPolynomial
from coxeter_descent.classical.chain_formulas import (
    TO_NATIVES,
    TO_POWERS,
    base_change,
    base_changes_are_inverse,
    chain_as_polynomial,
    chain_element,
    chain_index_of_mask,
    chain_indices,
    chain_mask,
    chain_product,
    chain_recurrence,
    closed_form_product,
    fold_chain,
    intersection_counts,
    phi_D_to_A,
    phi_failures,
    recurrence_product,
    solomon_chain_product,
)
from coxeter_descent.core.coxeter_types import Family
from coxeter_descent.core.errors import ConstructionError, SubsetError
from coxeter_descent.core.subsets import EMPTY


def test_chain_indices_and_masks():
    assert list(chain_indices("A", 3)) == [0, 1, 2, 3]
    assert list(chain_indices(Family.B, 2)) == [0, 1, 2]
    assert list(chain_indices("D", 4)) == [1, 2, 3, 4]
    assert chain_mask("A", 3, 0) == EMPTY
    assert chain_mask("B", 3, 2) == 0b011
    assert chain_mask("D", 4, 1) == EMPTY
    assert chain_mask("D", 4, 2) == 0b0011
    with pytest.raises(SubsetError):
        chain_mask("D", 4, 0)
    with pytest.raises(ConstructionError):
        chain_indices("D", 2)
    with pytest.raises(ConstructionError):
        chain_indices("E", 6)


def test_chain_index_of_mask():
    assert chain_index_of_mask("A", 3, EMPTY) == 0
    assert chain_index_of_mask("A", 3, 0b111) == 3
    assert chain_index_of_mask("A", 3, 0b101) is None
    assert chain_index_of_mask("A", 3, 0b1111) is None
    assert chain_index_of_mask("D", 4, EMPTY) == 1
    assert chain_index_of_mask("D", 4, 0b0001) is None
    assert chain_index_of_mask("D", 4, 0b0011) == 2
    for family, n in ((Family.A, 4), (Family.B, 3), (Family.D, 5)):
        for j in chain_indices(family, n):
            assert chain_index_of_mask(family, n, chain_mask(family, n, j)) == j


def test_fold_chain_boundaries():
    assert fold_chain("A", 3, {-1: 2, 0: 1}) == {0: 3}
    assert fold_chain("B", 3, {-1: 5, 1: 1}) == {1: 1}
    assert fold_chain("D", 4, {0: 1, 1: 1}) == {1: 3}
    with pytest.raises(SubsetError):
        fold_chain("A", 3, {4: 1})


@pytest.mark.parametrize("n", range(1, 7))
def test_empty_square_is_group_order_in_type_a(n):
    assert closed_form_product("A", n, 0, 0) == {0: factorial(n + 1)}


def test_small_closed_forms():
    assert closed_form_product("A", 2, 1, 1) == {0: 1, 1: 1}
    assert closed_form_product("B", 2, 1, 1) == {0: 1, 1: 2}
    assert closed_form_product("B", 2, 0, 0) == {0: 8}
    assert closed_form_product("D", 4, 3, 1) == {1: 8}
    assert closed_form_product("D", 3, 1, 1) == {1: 24}
    assert closed_form_product("D", 5, 4, 4) == {3: 1, 4: 2}


@pytest.mark.parametrize(
    "family,n",
    [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("B", 4), ("D", 3), ("D", 4)],
)
def test_closed_form_matches_solomon(algebras, family, n):
    algebra = algebras(f"{family}{n}")
    for j in chain_indices(family, n):
        for k in chain_indices(family, n):
            assert solomon_chain_product(algebra, family, j, k) == closed_form_product(family, n, j, k)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_type_a_counting(algebras, n):
    algebra = algebras(f"A{n}")
    for j in chain_indices("A", n):
        for k in chain_indices("A", n):
            assert intersection_counts(algebra, "A", j, k) == closed_form_product("A", n, j, k)


@pytest.mark.parametrize("family,n", [("A", 5), ("B", 4), ("D", 5)])
def test_recurrences(family, n):
    top = n - 1
    for k in range(0, n if family == "D" else n + 1):
        assert recurrence_product(family, n, k) == closed_form_product(family, n, top, n - k)
    assert chain_recurrence("A", 5, 2) == (2, 2)
    assert chain_recurrence("B", 5, 2) == (4, 2)
    with pytest.raises(SubsetError):
        chain_recurrence("D", 4, 4)


def test_chain_polynomials():
    assert chain_as_polynomial("A", 4, 2) == QPolynomial((0, -1, 1))
    assert chain_as_polynomial("B", 4, 2) == QPolynomial((0, -2, 1))
    assert chain_as_polynomial("D", 4, 0) == QPolynomial((1,))


@pytest.mark.parametrize("family,n", [("A", 3), ("B", 3), ("D", 4)])
def test_chain_polynomials_evaluate_to_natives(algebras, family, n):
    algebra = algebras(f"{family}{n}")
    generator = chain_element(algebra, family, {n - 1: 1})
    top = n - 1 if family == "D" else n
    for k in range(top + 1):
        p = chain_as_polynomial(family, n, k)
        value = algebra.evaluate_polynomial(list(p.coefficients), generator)
        assert value == chain_element(algebra, family, {n - k: 1})


def test_base_change_rows():
    assert base_change("A", 2, TO_POWERS)[2] == [0, -1, 1]
    assert base_change("B", 2, TO_POWERS)[2] == [0, -2, 1]
    assert base_change("B", 2, TO_NATIVES)[1] == [0, 1, 0]
    assert base_change("B", 2, TO_NATIVES)[2] == [0, 2, 1]
    assert len(base_change("D", 5, TO_POWERS)) == 5
    with pytest.raises(ValueError):
        base_change("A", 2, "sideways")


@pytest.mark.parametrize("family", ["A", "B", "D"])
def test_base_changes_are_inverse(family):
    for n in range(3, 13):
        assert base_changes_are_inverse(family, n)


def test_chain_product_is_bilinear():
    a = {0: 1, 2: 2}
    b = {1: 3}
    expected = {}
    for j, ca in a.items():
        for k, cb in b.items():
            for l, c in closed_form_product("B", 3, j, k).items():
                expected[l] = expected.get(l, 0) + ca * cb * c
    assert chain_product("B", 3, a, b) == {l: c for l, c in sorted(expected.items()) if c}


def test_phi_values():
    assert phi_D_to_A(4, {4: 1}) == {3: 1}
    assert phi_D_to_A(4, {1: 1}) == {0: 8}
    assert phi_D_to_A(4, {0: 1}) == {0: 16}
    with pytest.raises(ConstructionError):
        phi_D_to_A(2, {1: 1})


@pytest.mark.parametrize("n", range(3, 9))
def test_phi_is_multiplicative(n):
    assert phi_failures(n) == []
