from __future__ import annotations

from functools import lru_cache
from typing import List


@lru_cache(maxsize=None)
def stirling_first(k: int, m: int) -> int:
    """
    Unsigned Stirling number of the first kind [k, m]: permutations of k
    points with m cycles. The sign (-1)^(k-m) is applied by callers.
    """
    if k < 0 or m < 0:
        raise ValueError(f"Stirling numbers need k, m >= 0, got ({k}, {m})")
    if k == m:
        return 1
    if m == 0 or m > k:
        return 0
    return stirling_first(k - 1, m - 1) + (k - 1) * stirling_first(k - 1, m)


@lru_cache(maxsize=None)
def stirling_second(k: int, m: int) -> int:
    """Stirling number of the second kind {k, m}: partitions of k points into m blocks."""
    if k < 0 or m < 0:
        raise ValueError(f"Stirling numbers need k, m >= 0, got ({k}, {m})")
    if k == m:
        return 1
    if m == 0 or m > k:
        return 0
    return stirling_second(k - 1, m - 1) + m * stirling_second(k - 1, m)


def signed_stirling_first(k: int, m: int) -> int:
    return (-1) ** (k - m) * stirling_first(k, m)


def stirling_first_matrix(size: int) -> List[List[int]]:
    """Lower triangular [[s(k, m)]] with signed entries, k, m < size."""
    return [[signed_stirling_first(k, m) if m <= k else 0 for m in range(size)] for k in range(size)]


def stirling_second_matrix(size: int) -> List[List[int]]:
    return [[stirling_second(k, m) if m <= k else 0 for m in range(size)] for k in range(size)]
