from __future__ import annotations

from typing import Iterable, Iterator, List, NewType

from coxeter_descent.core.errors import SubsetError

# bit i <-> simple reflection s_{i+1}
SubsetMask = NewType("SubsetMask", int)

EMPTY = SubsetMask(0)


def full_mask(rank: int) -> SubsetMask:
    return SubsetMask((1 << rank) - 1)


def mask_of(indices: Iterable[int], rank: int) -> SubsetMask:
    """Mask of 1-based generator indices."""
    bits = 0
    for i in indices:
        if not 1 <= i <= rank:
            raise SubsetError(f"generator index {i} outside 1..{rank}")
        bits |= 1 << (i - 1)
    return SubsetMask(bits)


def members(mask: int) -> List[int]:
    """1-based generator indices in the subset, ascending."""
    out = []
    i = 0
    while mask >> i:
        if (mask >> i) & 1:
            out.append(i + 1)
        i += 1
    return out


def bit_indices(mask: int) -> Iterator[int]:
    """0-based bit positions in the subset, ascending."""
    i = 0
    while mask >> i:
        if (mask >> i) & 1:
            yield i
        i += 1


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def complement(mask: int, rank: int) -> SubsetMask:
    return SubsetMask(full_mask(rank) & ~mask)


def all_subsets(rank: int) -> List[SubsetMask]:
    return [SubsetMask(b) for b in range(1 << rank)]


def parse_subset(text: str, rank: int) -> SubsetMask:
    """
    Parses "1,3" (comma-separated 1-based indices) or "-" for the empty set.
    Concatenated digits such as "123" are accepted for ranks below 10.
    """
    cleaned = text.strip()
    if cleaned in ("-", ""):
        return EMPTY
    if "," in cleaned or " " in cleaned:
        parts = [p for p in cleaned.replace(" ", ",").split(",") if p]
    elif rank < 10 and cleaned.isdigit():
        parts = list(cleaned)
    else:
        parts = [cleaned]
    try:
        indices = [int(p) for p in parts]
    except ValueError as e:
        raise SubsetError(f"malformed subset {text!r}; expected e.g. '1,3' or '-'") from e
    if len(set(indices)) != len(indices):
        raise SubsetError(f"repeated generator in subset {text!r}")
    return mask_of(indices, rank)


def format_subset(mask: int) -> str:
    items = members(mask)
    if not items:
        return "-"
    return ",".join(str(i) for i in items)


def format_subset_braces(mask: int) -> str:
    items = members(mask)
    return "{" + ",".join(f"s{i}" for i in items) + "}"


def left_chain(j: int) -> SubsetMask:
    """{s_1, ..., s_j}."""
    return SubsetMask((1 << j) - 1) if j > 0 else EMPTY


def is_left_connected(mask: int, family: str = "A") -> bool:
    """
    True iff mask = {s_1..s_j} for some j >= 0.

    Type D: the chain index 1 is carried by the empty set, so the raw subset
    {s_1} is never a chain subset and gives False. Callers that follow the
    {s_1} ~ ∅ convention map index 1 to ∅ rather than accepting {s_1} here.
    """
    if mask & (mask + 1) != 0:
        return False
    if family == "D" and mask == 1:
        return False
    return True
