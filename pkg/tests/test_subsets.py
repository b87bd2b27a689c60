import pytest

from coxeter_descent.core.errors import SubsetError
from coxeter_descent.core.subsets import (
    EMPTY,
    all_subsets,
    complement,
    format_subset,
    format_subset_braces,
    full_mask,
    is_left_connected,
    is_subset,
    left_chain,
    mask_of,
    members,
    parse_subset,
)


@pytest.mark.parametrize(
    "text,rank,mask",
    [
        ("1,3", 3, 0b101),
        ("13", 3, 0b101),
        ("2 3", 3, 0b110),
        ("-", 3, 0),
        ("", 3, 0),
        ("10", 10, 1 << 9),
        ("1,10", 10, 1 | 1 << 9),
    ],
)
def test_parse_subset(text, rank, mask):
    assert parse_subset(text, rank) == mask


@pytest.mark.parametrize("text", ["1,4", "1,1", "a", "0"])
def test_parse_subset_rejects(text):
    with pytest.raises(SubsetError):
        parse_subset(text, 3)


def test_format_subset():
    assert format_subset(EMPTY) == "-"
    assert format_subset(0b101) == "1,3"
    assert format_subset_braces(0b101) == "{s1,s3}"
    assert members(0b1011) == [1, 2, 4]


def test_set_operations():
    assert mask_of([1, 3], 3) == 0b101
    assert full_mask(4) == 0b1111
    assert complement(0b101, 3) == 0b010
    assert is_subset(0b001, 0b011)
    assert not is_subset(0b100, 0b011)
    assert len(all_subsets(3)) == 8


def test_left_chains():
    assert left_chain(0) == EMPTY
    assert left_chain(3) == 0b111
    assert is_left_connected(0b011)
    assert is_left_connected(EMPTY)
    assert not is_left_connected(0b101)
    assert not is_left_connected(0b001, "D")
    assert is_left_connected(0b111, "D")
