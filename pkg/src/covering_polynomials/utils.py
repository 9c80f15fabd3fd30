"""Utility functions used by the other modules."""

from functools import cache
from typing import Iterable, TypeVar

from tqdm.auto import tqdm


T = TypeVar("T")


@cache
def pascal_row(n: int) -> tuple[int, ...]:
    """Row `n` of Pascal's triangle.

    Args:
        n:
            The row index, non-negative.

    Returns:
        The binomial coefficients `C(n, 0), ..., C(n, n)`.
    """
    if n < 0:
        raise ValueError(f"Pascal rows are indexed by non-negative integers, got {n}")
    if n == 0:
        return (1,)
    previous = pascal_row(n - 1)
    return tuple(
        (previous[k - 1] if k > 0 else 0) + (previous[k] if k < n else 0)
        for k in range(n + 1)
    )


def binomial(n: int, k: int) -> int:
    """The binomial coefficient `C(n, k)`, which is zero if `k < 0`, `k > n` or `n < 0`.

    >>> binomial(5, 2), binomial(3, -1), binomial(3, 4)
    (10, 0, 0)
    """
    if n < 0 or k < 0 or k > n:
        return 0
    return pascal_row(n)[k]


def iter_bits(bitset: int) -> Iterable[int]:
    """Yield the indices of the set bits of a non-negative integer, lowest first."""
    while bitset:
        lowest = bitset & -bitset
        yield lowest.bit_length() - 1
        bitset ^= lowest


def bitset_of(indices: Iterable[int]) -> int:
    """The bitset with exactly the given indices set."""
    bitset = 0
    for index in indices:
        bitset |= 1 << index
    return bitset


def progress_bar(iterable: Iterable[T], desc: str, enabled: bool = True) -> Iterable[T]:
    """Wrap an iterable in a progress bar.

    Args:
        iterable:
            The iterable to wrap.
        desc:
            The description shown next to the bar.
        enabled:
            Whether to show the bar at all.

    Returns:
        The wrapped iterable.
    """
    return tqdm(iterable, desc=desc, disable=not enabled, leave=False)
