"""Tests for inversion counting and the closed-form swap bounds."""

from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from reference import merge_count_inversions
from sortlab import InversionSnapshot, count_inversions, max_inversions, swap_bounds, take_snapshot


@pytest.mark.parametrize(
    "values, expected",
    [
        ([], 0),
        ([1], 0),
        ([1, 2], 0),
        ([2, 1], 1),
        ([2, 3, 1], 2),
        ([3, 2, 1], 3),
        ([1, 2, 3], 0),
        ([2, 2, 1], 2),
        ([1, 1, 1], 0),
        ([4, 1, 2, 3], 3),
    ],
)
def test_count_inversions_examples(values, expected):
    assert count_inversions(values) == expected


def test_max_inversions_values():
    assert [max_inversions(n) for n in range(6)] == [0, 0, 1, 3, 6, 10]
    with pytest.raises(ValueError):
        max_inversions(-1)


def test_max_attained_only_by_strictly_decreasing():
    assert count_inversions([5, 4, 3, 2, 1]) == max_inversions(5)
    assert count_inversions([5, 4, 3, 1, 2]) < max_inversions(5)


@pytest.mark.parametrize(
    "n, inversions, expected",
    [
        (8, 10, (29, 24, 7)),
        (1, 0, (1, 0, 0)),
        (0, 0, (1, 0, 0)),
        (2, 1, (2, 3, 1)),
        (3, 0, (4, 4, 2)),
    ],
)
def test_swap_bounds_examples(n, inversions, expected):
    assert swap_bounds(n, inversions) == expected


def test_take_snapshot():
    snap = take_snapshot([2, 3, 1])
    assert snap == InversionSnapshot(inversions=2, max_inversions=3)
    assert take_snapshot([]) == InversionSnapshot(0, 0)


def test_against_merge_oracle_seeded():
    rng = random.Random(99)
    for n in (0, 1, 2, 17, 64, 256):
        for _ in range(8):
            values = [rng.randrange(-20, 21) for _ in range(n)]
            assert count_inversions(values) == merge_count_inversions(values)


@given(st.lists(st.integers(-100, 100), max_size=64))
def test_property_matches_merge_oracle(values):
    assert count_inversions(values) == merge_count_inversions(values)


@given(st.lists(st.integers(-100, 100), max_size=64))
def test_property_within_range(values):
    inv = count_inversions(values)
    assert 0 <= inv <= max_inversions(len(values))


@given(st.lists(st.integers(-100, 100), max_size=40))
def test_property_appending_a_new_maximum_changes_nothing(values):
    top = (max(values) if values else 0) + 1
    assert count_inversions(values + [top]) == count_inversions(values)


@given(st.lists(st.integers(-100, 100), max_size=40))
def test_property_prepending_a_new_maximum_adds_n(values):
    top = (max(values) if values else 0) + 1
    assert count_inversions([top] + values) == count_inversions(values) + len(values)


@given(st.integers(min_value=0, max_value=200))
def test_property_reversed_range_attains_max(n):
    assert count_inversions(list(range(n, 0, -1))) == max_inversions(n)
