"""Tests related to the utility functions."""

from typing import Iterable

import pytest
from covering_polynomials.utils import (
    binomial,
    bitset_of,
    iter_bits,
    pascal_row,
    progress_bar,
)


@pytest.mark.parametrize(
    "n, expected",
    [
        (0, (1,)),
        (1, (1, 1)),
        (4, (1, 4, 6, 4, 1)),
    ],
)
def test_pascal_row(n, expected) -> None:
    assert pascal_row(n) == expected


def test_pascal_row_of_negative_index() -> None:
    with pytest.raises(ValueError):
        pascal_row(-1)


@pytest.mark.parametrize(
    "n, k, expected",
    [
        (5, 2, 10),
        (20, 10, 184756),
        (3, 0, 1),
        (3, -1, 0),
        (3, 4, 0),
        (-1, 0, 0),
    ],
)
def test_binomial(n, k, expected) -> None:
    assert binomial(n, k) == expected


class TestBitsets:
    def test_iter_bits(self) -> None:
        assert list(iter_bits(0b101001)) == [0, 3, 5]

    def test_iter_bits_of_zero(self) -> None:
        assert list(iter_bits(0)) == []

    def test_bitset_of(self) -> None:
        assert bitset_of([5, 0, 3]) == 0b101001

    def test_duplicates_are_ignored(self) -> None:
        assert bitset_of([2, 2]) == 0b100


class TestProgressBar:
    def test_yields_all_items(self) -> None:
        assert list(progress_bar(range(3), desc="Counting", enabled=False)) == [0, 1, 2]

    def test_is_iterable(self, cfg) -> None:
        bar = progress_bar(["a", "b"], desc="Letters", enabled=cfg.progress_bars)
        assert isinstance(bar, Iterable)
