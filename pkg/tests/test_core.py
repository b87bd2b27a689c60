import pytest

from coxeter_descent.core.coxeter_system import build_system, format_word, parse_word
from coxeter_descent.core.coxeter_types import (
    CoxeterType,
    Family,
    component_types,
    coxeter_matrix,
    group_order,
    number_of_reflections,
    parse_type_spec,
)
from coxeter_descent.core.errors import (
    ConstructionError,
    EnumerationCapError,
    GeneratorIndexError,
    MixedSystemError,
    SubsetError,
)
from coxeter_descent.core.scalars import GOLDEN_RATIO, QSqrt5
from coxeter_descent.core.subsets import all_subsets, full_mask, mask_of


@pytest.mark.parametrize(
    "spec,label,rank",
    [
        ("A5", "A5", 5),
        ("b3", "B3", 3),
        ("D4", "D4", 4),
        ("I2:7", "I2:7", 2),
        ("I2(7)", "I2:7", 2),
        ("H3", "H3", 3),
        ("F4", "F4", 4),
        ("E8", "E8", 8),
    ],
)
def test_parse_type_spec(spec, label, rank):
    ctype = parse_type_spec(spec)
    assert ctype.label == label
    assert ctype.rank == rank


@pytest.mark.parametrize("spec", ["A0", "B1", "D2", "I2:2", "H5", "E9", "Q3", ""])
def test_parse_type_spec_rejects(spec):
    with pytest.raises(ConstructionError):
        parse_type_spec(spec)


def test_alternate_labels():
    assert parse_type_spec("A3").alternate_labels() == ["D3"]
    assert parse_type_spec("I2:4").alternate_labels() == ["B2"]
    assert parse_type_spec("B3").alternate_labels() == []


@pytest.mark.parametrize(
    "spec,order,reflections",
    [
        ("A1", 2, 1),
        ("A3", 24, 6),
        ("B3", 48, 9),
        ("D4", 192, 12),
        ("I2:7", 14, 7),
        ("H3", 120, 15),
        ("H4", 14400, 60),
        ("F4", 1152, 24),
        ("E6", 51840, 36),
        ("E7", 2903040, 63),
        ("E8", 696729600, 120),
    ],
)
def test_group_order_and_reflections(spec, order, reflections):
    ctype = parse_type_spec(spec)
    assert group_order(ctype) == order
    assert number_of_reflections(ctype) == reflections


def test_coxeter_matrix_labelling():
    d4 = coxeter_matrix(parse_type_spec("D4"))
    assert d4[0][2] == 3 and d4[1][2] == 3 and d4[2][3] == 3
    assert d4[0][1] == 2
    b3 = coxeter_matrix(parse_type_spec("B3"))
    assert b3[0][1] == 4 and b3[1][2] == 3
    h3 = coxeter_matrix(parse_type_spec("H3"))
    assert h3[0][1] == 5


def test_golden_ratio_arithmetic():
    phi = GOLDEN_RATIO
    assert phi * phi == phi + QSqrt5(1, 0)


@pytest.mark.parametrize("spec", ["A3", "B3", "D4", "I2:7", "H3", "F4"])
def test_generators_satisfy_coxeter_relations(spec):
    system = build_system(spec)
    identity = system.identity()
    for i in range(1, system.rank + 1):
        for j in range(1, system.rank + 1):
            m = system.coxeter_matrix[i - 1][j - 1]
            pair = system.generator(i) * system.generator(j)
            power = identity
            for step in range(1, m + 1):
                power = power * pair
                if step < m:
                    assert power != identity
            assert power == identity


@pytest.mark.parametrize("spec", ["A3", "B3", "D4", "I2:7", "H3"])
def test_enumeration_matches_order(spec):
    system = build_system(spec)
    elements = list(system.enumerate_group())
    assert len(elements) == system.group_order
    assert len(set(elements)) == system.group_order
    assert max(w.length for w in elements) == number_of_reflections(system.ctype)
    assert sum(1 for w in elements if w.length == 1) == system.rank


@pytest.mark.parametrize("spec", ["A3", "B3", "D4"])
def test_root_model_agrees_on_lengths(spec):
    native = build_system(spec)
    roots = build_system(spec, model="root")
    assert roots.model.kind == "root"
    for w in native.enumerate_group():
        assert roots.element_from_word(w.word()).length == w.length


def test_reduced_words_round_trip():
    system = build_system("B3")
    for w in system.enumerate_group():
        word = w.word()
        assert len(word) == w.length
        assert system.element_from_word(word) == w


def test_parse_and_format_word():
    assert parse_word("2 1 3 2") == (2, 1, 3, 2)
    assert parse_word("") == ()
    assert parse_word("e") == ()
    assert format_word((1, 2)) == "1 2"
    with pytest.raises(GeneratorIndexError):
        parse_word("1 x")


def test_conjugation_to_simple():
    system = build_system("A2")
    d = system.element_from_word("1 2")
    assert system.conjugate(d, 2) == 1
    assert system.conjugate(d, 1) is None
    assert system.conjugate_subset(mask_of([1, 2], 2), d) == mask_of([1], 2)


@pytest.mark.parametrize("spec", ["A4", "B3", "D4", "H3", "F4", "E6", "E8"])
def test_longest_element_length(spec):
    system = build_system(spec)
    w0 = system.longest_element(full_mask(system.rank))
    assert w0.length == number_of_reflections(system.ctype)
    assert w0 * w0 == system.identity()


def test_coset_rep_d():
    system = build_system("B3")
    J = mask_of([2, 3], 3)
    K = full_mask(3)
    d = system.coset_rep_d(J, K)
    assert d.length == 9 - 3
    assert d == system.longest_element(J) * system.longest_element(K)
    with pytest.raises(SubsetError):
        system.coset_rep_d(K, J)


def test_parabolic_orders():
    assert build_system("B3").parabolic_order(mask_of([1, 2], 3)) == 8
    assert build_system("H3").parabolic_order(mask_of([1, 2], 3)) == 10
    assert build_system("D4").parabolic_order(mask_of([1, 2], 4)) == 4


@pytest.mark.parametrize("spec", ["A1", "A4", "B4", "D4", "D5", "I2:7", "H3", "H4", "F4", "E6", "E7", "E8"])
def test_full_diagram_is_recognised(spec):
    ctype = parse_type_spec(spec)
    assert component_types(coxeter_matrix(ctype), list(range(ctype.rank))) == [ctype]


@pytest.mark.parametrize(
    "spec,s,order",
    [
        ("E8", 1, 322560),
        ("E8", 2, 40320),
        ("E8", 4, 1440),
        ("E8", 8, 2903040),
        ("F4", 1, 48),
        ("F4", 4, 48),
        ("H4", 1, 24),
        ("H4", 4, 120),
        ("D5", 3, 24),
        ("D5", 5, 192),
    ],
)
def test_maximal_parabolic_orders_without_enumerating(spec, s, order):
    system = build_system(spec, enumeration_cap=10)
    J = full_mask(system.rank) & ~(1 << (s - 1))
    assert system.parabolic_order(J) == order
    assert system.group_order % order == 0


def test_parabolic_components_of_e8():
    system = build_system("E8")
    assert system.parabolic_types(mask_of([1, 2, 3, 5, 6, 7, 8], 8)) == [
        CoxeterType(Family.A, 2),
        CoxeterType(Family.A, 1),
        CoxeterType(Family.A, 4),
    ]
    assert system.parabolic_types(0) == []
    assert system.parabolic_order(0) == 1


@pytest.mark.parametrize("spec", ["B3", "D4", "H3", "F4"])
def test_parabolic_order_agrees_with_enumeration(spec):
    system = build_system(spec)
    for K in all_subsets(system.rank):
        assert system.parabolic_order(K) == len(system.parabolic_elements(K))


def test_generator_index_errors():
    system = build_system("A3")
    with pytest.raises(GeneratorIndexError):
        system.generator(0)
    with pytest.raises(GeneratorIndexError):
        system.generator(4)
    with pytest.raises(SubsetError):
        system.check_subset(1 << 3)


def test_mixed_systems_rejected():
    a = build_system("A3")
    b = build_system("B3")
    with pytest.raises(MixedSystemError):
        a.multiply(a.generator(1), b.generator(1))


def test_enumeration_cap():
    system = build_system("E6", enumeration_cap=1000)
    assert not system.enumerable
    with pytest.raises(EnumerationCapError) as info:
        next(system.enumerate_group())
    assert info.value.cap == 1000
    assert info.value.requested == 51840


def test_unknown_model_rejected():
    with pytest.raises(ConstructionError):
        build_system("A3", model="matrix")


def test_family_values():
    assert Family("I2") is Family.I2


SMALL_GROUPS = ["A3", "B3", "D4", "D5", "I2:7", "H3", "F4"]


@pytest.mark.parametrize("spec", SMALL_GROUPS)
def test_ascents_agree_with_length(spec):
    system = build_system(spec)
    for w in system.enumerate_group():
        for i in range(1, system.rank + 1):
            s = system.generator(i)
            assert system.has_right_ascent(w, i) == ((w * s).length == w.length + 1)
            assert system.has_left_ascent(w, i) == ((s * w).length == w.length + 1)


@pytest.mark.parametrize("spec", SMALL_GROUPS)
def test_only_identity_has_every_ascent(spec):
    system = build_system(spec)
    generators = range(1, system.rank + 1)
    climbing = [w for w in system.enumerate_group() if all(system.has_right_ascent(w, i) for i in generators)]
    assert climbing == [system.identity()]


@pytest.mark.parametrize("spec", ["A4", "B4", "D5", "H3", "F4", "E6"])
def test_longest_element_descends_under_every_generator(spec):
    system = build_system(spec)
    w0 = system.longest_element(full_mask(system.rank))
    for i in range(1, system.rank + 1):
        assert not system.has_right_ascent(w0, i)
        assert not system.has_left_ascent(w0, i)
        assert (w0 * system.generator(i)).length == w0.length - 1


@pytest.mark.parametrize("spec", ["D4", "D5"])
def test_type_d_elements_have_an_even_number_of_sign_changes(spec):
    system = build_system(spec)
    elements = list(system.enumerate_group())
    assert len(elements) == system.group_order
    assert all(sum(1 for x in w.payload if x < 0) % 2 == 0 for w in elements)
