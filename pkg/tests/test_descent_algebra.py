from fractions import Fraction

import pytest

from coxeter_descent.algebra.algebra_element import AlgebraElement
from coxeter_descent.algebra.descent_algebra import DescentAlgebra
from coxeter_descent.core.coxeter_system import build_system
from coxeter_descent.core.errors import EnumerationCapError, MixedSystemError, SubsetError
from coxeter_descent.core.subsets import EMPTY, all_subsets, full_mask, is_subset, mask_of


def test_left_transversal_of_a2(algebras):
    algebra = algebras("A2")
    transversal = algebra.min_coset_reps(mask_of([1], 2))
    assert transversal.words() == ["", "2", "1 2"]
    assert transversal.to_json()["size"] == 3


def test_double_transversal_of_b3(algebras):
    algebra = algebras("B3")
    J = mask_of([1, 2], 3)
    assert len(algebra.min_double_coset_reps(J, J)) == 3


@pytest.mark.parametrize("spec", ["B3", "D4", "H3", "I2:5"])
def test_transversal_sizes(algebras, spec):
    algebra = algebras(spec)
    system = algebra.system
    for J in all_subsets(system.rank):
        assert len(algebra.min_coset_reps(J)) * system.parabolic_order(J) == system.group_order


def test_relative_transversal(algebras):
    algebra = algebras("B3")
    J = mask_of([1], 3)
    K = mask_of([1, 2], 3)
    assert len(algebra.relative_coset_reps(J, K)) == 4
    with pytest.raises(SubsetError):
        algebra.relative_coset_reps(K, J)


@pytest.mark.parametrize("spec", ["A3", "B3", "I2:6"])
def test_solomon_rule_matches_convolution(algebras, spec):
    algebra = algebras(spec)
    subsets = all_subsets(algebra.rank)
    lifted = {J: algebra.x_of(J) for J in subsets}
    for J in subsets:
        for K in subsets:
            product = algebra.solomon_product(J, K)
            assert algebra.descent_to_group_algebra(product) == algebra.convolve(lifted[J], lifted[K])


@pytest.mark.parametrize("spec", ["A4", "D4", "H3"])
def test_structure_constants_count_cosets(algebras, spec):
    algebra = algebras(spec)
    size = {J: len(algebra.min_coset_reps(J)) for J in all_subsets(algebra.rank)}
    for J in size:
        for K in size:
            constants = algebra.structure_constants(J, K)
            assert all(count > 0 and is_subset(L, K) for L, count in constants.items())
            assert sum(count * size[L] for L, count in constants.items()) == size[J] * size[K]


def test_full_subset_is_identity(algebras):
    algebra = algebras("B3")
    S = full_mask(3)
    for J in all_subsets(3):
        assert algebra.solomon_product(S, J) == algebra.x(J)
        assert algebra.solomon_product(J, S) == algebra.x(J)
    assert algebra.one() == algebra.x(S)


def test_empty_subset_absorbs(algebras):
    algebra = algebras("A3")
    for J in all_subsets(3):
        size = len(algebra.min_coset_reps(J))
        assert algebra.solomon_product(J, EMPTY) == algebra.x(EMPTY, size)


@pytest.mark.parametrize("spec", ["A3", "B3", "H3"])
def test_intersections_of_conjugated_parabolics(algebras, spec):
    algebra = algebras(spec)
    system = algebra.system
    rank = system.rank
    for J in all_subsets(rank):
        W_J = system.parabolic_elements(J)
        for K in all_subsets(rank):
            W_K = {w.payload for w in system.parabolic_elements(K)}
            for d in algebra.min_double_coset_reps(J, K):
                d_inv = d.inverse()
                meet = {(d_inv * w * d).payload for w in W_J} & W_K
                expected = {w.payload for w in system.parabolic_elements(system.conjugate_subset(J, d, K))}
                assert meet == expected


@pytest.mark.parametrize("spec", ["A3", "B3", "H3"])
def test_transversal_factorization(algebras, spec):
    algebra = algebras(spec)
    for K in all_subsets(algebra.rank):
        for J in all_subsets(algebra.rank):
            if is_subset(J, K):
                assert algebra.verify_transversal_factorization(J, K)


def test_transversal_factorization_needs_subset(algebras):
    algebra = algebras("A3")
    with pytest.raises(SubsetError):
        algebra.verify_transversal_factorization(mask_of([1, 2], 3), mask_of([1], 3))


def test_polynomials_in_an_element(algebras):
    algebra = algebras("A2")
    x = algebra.x(mask_of([1], 2))
    assert algebra.power(x, 0) == algebra.one()
    assert algebra.power(x, 2) == algebra.x(mask_of([1], 2)) + algebra.x(EMPTY)
    # x(x - 1)(x - 3) annihilates x_J
    assert algebra.evaluate_polynomial([0, 3, -4, 1], x).is_zero()
    assert algebra.commutator(x, algebra.power(x, 2)).is_zero()
    with pytest.raises(ValueError):
        algebra.power(x, -1)


def test_noncommutative_pair(algebras):
    algebra = algebras("A3")
    a = algebra.x(mask_of([1], 3))
    b = algebra.x(mask_of([2], 3))
    assert not algebra.commutator(algebra.x(mask_of([1, 2], 3)), algebra.x(mask_of([2, 3], 3))).is_zero()
    assert algebra.commutator(a, a).is_zero()
    assert algebra.product_of_elements(a + b, a) == algebra.product_of_elements(a, a) + algebra.product_of_elements(b, a)


def test_mixed_algebras_rejected(algebras):
    a3 = algebras("A3")
    b3 = algebras("B3")
    with pytest.raises(MixedSystemError):
        a3.product_of_elements(a3.one(), b3.one())
    with pytest.raises(MixedSystemError):
        a3.one() + b3.one()


def test_enumeration_cap_stops_transversals():
    algebra = DescentAlgebra(build_system("H3", enumeration_cap=10))
    with pytest.raises(EnumerationCapError) as info:
        algebra.min_coset_reps(EMPTY)
    assert info.value.requested == 120
    # exactly at the cap is still allowed
    assert len(algebra.relative_coset_reps(EMPTY, mask_of([1, 2], 3))) == 10
    assert len(algebra.relative_coset_reps(mask_of([1], 3), mask_of([1, 2], 3))) == 5


def test_oversized_transversal_is_refused_before_enumerating():
    algebra = DescentAlgebra(build_system("E8", enumeration_cap=10_000_000))
    with pytest.raises(EnumerationCapError) as info:
        algebra.solomon_product(mask_of([1], 8), EMPTY)
    assert info.value.requested == 696729600
    assert len(algebra.min_coset_reps(mask_of([1, 2, 3, 4, 5, 6, 7], 8))) == 240


def test_algebra_element_arithmetic():
    a = AlgebraElement("A2/permutation", 2, {0: 2, 3: -1, 1: 0})
    assert a.support() == [0, 3]
    assert str(a) == "2*x[-] - x[1,2]"
    assert a.to_json() == {"-": "2", "1,2": "-1"}
    assert AlgebraElement.from_json("A2/permutation", 2, a.to_json()) == a
    assert (a - a).is_zero()
    assert a.scale(Fraction(1, 2))[0] == 1
    assert not a.scale(Fraction(1, 2)).is_integral()
    with pytest.raises(SubsetError):
        AlgebraElement("A2/permutation", 2, {4: 1})


@pytest.mark.parametrize("spec", ["A3", "B3"])
def test_solomon_product_is_associative(algebras, spec):
    algebra = algebras(spec)
    subsets = all_subsets(algebra.rank)
    for J in subsets:
        for K in subsets:
            left = algebra.solomon_product(J, K)
            for L in subsets:
                right = algebra.solomon_product(K, L)
                assert algebra.product_of_elements(left, algebra.x(L)) == algebra.product_of_elements(
                    algebra.x(J), right
                )


@pytest.mark.parametrize("spec", ["B3", "B4", "D4", "D5"])
def test_double_cosets_of_the_maximal_chain_subgroup(algebras, spec):
    algebra = algebras(spec)
    system = algebra.system
    n = system.rank
    J = full_mask(n) & ~(1 << (n - 1))
    if spec.startswith("B"):
        # s_n ... s_2 s_1 s_2 ... s_n
        third = list(range(n, 1, -1)) + [1] + list(range(2, n + 1))
    else:
        # s_n ... s_3 s_1 s_2 s_3 ... s_n
        third = list(range(n, 2, -1)) + [1, 2] + list(range(3, n + 1))
    reps = algebra.min_double_coset_reps(J, J)
    assert set(reps) == {system.element_from_word(w) for w in ([], [n], third)}
    assert [w.length for w in reps] == [0, 1, len(third)]
