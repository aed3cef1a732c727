"""Inversion counting and closed-form swap bounds.

An inversion is a pair of positions ``(i, j)`` with ``i < j`` and
``A[i] > A[j]``; the count measures how disordered an array is.  The
bounds below relate the double-loop sort's swap count to the inversion
count of its input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


def count_inversions(a: Sequence) -> int:
    """Count pairs ``i < j`` with ``a[i] > a[j]`` by direct pair scan.

    Strictly greater, so duplicate pairs are never inversions.  O(n^2),
    which is the unambiguous reference at verification scale.
    """
    n = len(a)
    total = 0
    for i in range(n):
        ai = a[i]
        for j in range(i + 1, n):
            if a[j] < ai:
                total += 1
    return total


def max_inversions(n: int) -> int:
    """Largest possible inversion count for length ``n``: ``n(n-1)/2``,
    achieved by a strictly decreasing array."""
    if n < 0:
        raise ValueError(f"length must be non-negative, got {n}")
    return n * (n - 1) // 2


@dataclass(frozen=True)
class InversionSnapshot:
    """Inversion count of an array next to the maximum possible."""

    inversions: int
    max_inversions: int


def take_snapshot(a: Sequence) -> InversionSnapshot:
    """Measure ``a``: its inversion count and the length-n maximum."""
    return InversionSnapshot(count_inversions(a), max_inversions(len(a)))


def swap_bounds(n: int, inversions: int) -> tuple[int, int, int]:
    """Closed-form swap bounds for a length-``n`` input with
    ``inversions`` inversions, as ``(upper_from_max_inversions,
    upper_from_input_inversions, lower)``.

    The two upper bounds are ``n(n-1)/2 + 1`` and ``I + 2(n-1)``; the
    lower bound is ``n - 1``.  For degenerate lengths below 2 the lower
    bound is 0 (there is no maximum element to relocate), and at n = 0
    the inversion-based upper bound is clamped to 0.
    """
    if n < 0:
        raise ValueError(f"length must be non-negative, got {n}")
    upper_total = max_inversions(n) + 1
    upper_adaptive = max(0, inversions + 2 * (n - 1))
    lower = max(0, n - 1)
    return upper_total, upper_adaptive, lower
