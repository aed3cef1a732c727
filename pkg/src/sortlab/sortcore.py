"""Instrumented comparison sorts with a uniform observer interface.

Every sorter takes a sequence of keys (anything with a strict total order
via ``<``), works on its own copy, and reports totals in a
:class:`SortReport`.  Pass an observer callable to receive one
:class:`TraceEvent` per comparison and per swap, in execution order.

Index convention: arrays are plain Python lists indexed from 0
internally, but all trace events carry 1-based positions (list index
``p`` is reported as position ``p + 1``).  A swap event for positions
``(i, j)`` means "exchange the cells at 1-based positions i and j" and
is always emitted immediately after the comparison that triggered it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence, TypeVar

Key = TypeVar("Key")

PHASE_SELECTION = "selection"
PHASE_INSERTION = "insertion"
PHASE_NA = "not_applicable"

KIND_COMPARE = "compare"
KIND_SWAP = "swap"


@dataclass(frozen=True, slots=True)
class TraceEvent:
    """One comparison or swap.

    ``i`` and ``j`` are the 1-based positions of the two cells compared
    (the comparison is between ``A[i]`` and ``A[j]``).  ``seq`` is the
    0-based ordinal of the event within its run and strictly increases.
    ``phase`` is meaningful only for ``icbics_sort``: its first outer
    pass is the selection phase, every later pass the insertion phase.
    All other algorithms emit ``not_applicable``.
    """

    seq: int
    kind: str
    i: int
    j: int
    phase: str


@dataclass(frozen=True)
class SortReport:
    """Per-run totals for one sort invocation.

    ``swaps`` counts swap events; for ``std_insertion_sort`` the count
    models element shifts as adjacent exchanges and ``swap_label`` is
    ``"moves"`` to flag the different semantics.  ``output`` is a new
    list, always a permutation of the input.
    """

    algorithm: str
    n: int
    comparisons: int
    swaps: int
    output: list
    swap_label: str = "swaps"


Observer = Callable[[TraceEvent], None]


class TraceRecorder:
    """Buffering observer: collects every event in ``events``.

    The sorters themselves never store events, so plain counting runs
    stay O(1) in memory; use this recorder when the full trace matters.
    """

    def __init__(self) -> None:
        self.events: list[TraceEvent] = []

    def __call__(self, event: TraceEvent) -> None:
        self.events.append(event)


def icbics_sort(values: Sequence[Key], observer: Observer | None = None) -> SortReport:
    """Full double-loop sort: swap whenever ``A[i] < A[j]``.

    Both loops run over the whole array, the self-comparison ``i == j``
    included, so the run makes exactly ``n * n`` comparisons no matter
    the input.  The comparison looks backwards for an ascending sort,
    yet the output is non-decreasing: the first outer pass drags the
    maximum into ``A[1]`` (selection phase), and each later pass inserts
    ``A[i]`` into the sorted prefix by repeated swaps (insertion phase).
    Equal keys are never swapped (strict ``<``).
    """
    a = list(values)
    n = len(a)
    obs = observer
    comparisons = 0
    swaps = 0
    seq = 0
    for i in range(n):
        phase = PHASE_SELECTION if i == 0 else PHASE_INSERTION
        ip = i + 1
        ai = a[i]
        for j in range(n):
            aj = a[j]
            comparisons += 1
            if obs is not None:
                obs(TraceEvent(seq, KIND_COMPARE, ip, j + 1, phase))
                seq += 1
            if ai < aj:
                a[i] = aj
                a[j] = ai
                ai = aj
                swaps += 1
                if obs is not None:
                    obs(TraceEvent(seq, KIND_SWAP, ip, j + 1, phase))
                    seq += 1
    return SortReport("icbics", n, comparisons, swaps, a)


def exchange_sort(values: Sequence[Key], observer: Observer | None = None) -> SortReport:
    """Classical exchange sort: ``j`` runs from ``i + 1`` to ``n``, swap
    when ``A[i] > A[j]``.  Makes exactly ``n (n - 1) / 2`` comparisons.
    """
    a = list(values)
    n = len(a)
    obs = observer
    comparisons = 0
    swaps = 0
    seq = 0
    for i in range(n):
        ip = i + 1
        ai = a[i]
        for j in range(i + 1, n):
            aj = a[j]
            comparisons += 1
            if obs is not None:
                obs(TraceEvent(seq, KIND_COMPARE, ip, j + 1, PHASE_NA))
                seq += 1
            if aj < ai:
                a[i] = aj
                a[j] = ai
                ai = aj
                swaps += 1
                if obs is not None:
                    obs(TraceEvent(seq, KIND_SWAP, ip, j + 1, PHASE_NA))
                    seq += 1
    return SortReport("exchange", n, comparisons, swaps, a)


def improved_sort(values: Sequence[Key], observer: Observer | None = None) -> SortReport:
    """The double-loop sort with its pointless iterations removed: the
    outer loop starts at 2 and the inner loop stops at ``i - 1``.  Same
    output as ``icbics_sort`` on every input, with ``n (n - 1) / 2``
    comparisons and never more swaps.  It is insertion sort that scans
    the sorted prefix from the front and moves elements by swapping.
    """
    a = list(values)
    n = len(a)
    obs = observer
    comparisons = 0
    swaps = 0
    seq = 0
    for i in range(1, n):
        ip = i + 1
        ai = a[i]
        for j in range(i):
            aj = a[j]
            comparisons += 1
            if obs is not None:
                obs(TraceEvent(seq, KIND_COMPARE, ip, j + 1, PHASE_NA))
                seq += 1
            if ai < aj:
                a[i] = aj
                a[j] = ai
                ai = aj
                swaps += 1
                if obs is not None:
                    obs(TraceEvent(seq, KIND_SWAP, ip, j + 1, PHASE_NA))
                    seq += 1
    return SortReport("improved", n, comparisons, swaps, a)


def icbics_desc_ineq(values: Sequence[Key], observer: Observer | None = None) -> SortReport:
    """Descending variant of ``icbics_sort`` with the inequality
    reversed: swap whenever ``A[i] > A[j]``.  Output is non-increasing;
    still exactly ``n * n`` comparisons.
    """
    a = list(values)
    n = len(a)
    obs = observer
    comparisons = 0
    swaps = 0
    seq = 0
    for i in range(n):
        ip = i + 1
        ai = a[i]
        for j in range(n):
            aj = a[j]
            comparisons += 1
            if obs is not None:
                obs(TraceEvent(seq, KIND_COMPARE, ip, j + 1, PHASE_NA))
                seq += 1
            if aj < ai:
                a[i] = aj
                a[j] = ai
                ai = aj
                swaps += 1
                if obs is not None:
                    obs(TraceEvent(seq, KIND_SWAP, ip, j + 1, PHASE_NA))
                    seq += 1
    return SortReport("icbics-desc-ineq", n, comparisons, swaps, a)


def icbics_desc_loopswap(values: Sequence[Key], observer: Observer | None = None) -> SortReport:
    """Descending variant of ``icbics_sort`` obtained by exchanging the
    two loops (outer ``j``, inner ``i``) while keeping the ``A[i] < A[j]``
    condition.  By the i/j symmetry this sorts non-increasing and, on
    distinct keys, matches ``icbics_desc_ineq`` output exactly.

    Trace events still report ``(i, j)`` as the comparison operands, so
    here ``j`` is the outer-loop index.
    """
    a = list(values)
    n = len(a)
    obs = observer
    comparisons = 0
    swaps = 0
    seq = 0
    for j in range(n):
        jp = j + 1
        aj = a[j]
        for i in range(n):
            ai = a[i]
            comparisons += 1
            if obs is not None:
                obs(TraceEvent(seq, KIND_COMPARE, i + 1, jp, PHASE_NA))
                seq += 1
            if ai < aj:
                a[i] = aj
                a[j] = ai
                aj = ai
                swaps += 1
                if obs is not None:
                    obs(TraceEvent(seq, KIND_SWAP, i + 1, jp, PHASE_NA))
                    seq += 1
    return SortReport("icbics-desc-loops", n, comparisons, swaps, a)


def std_insertion_sort(values: Sequence[Key], observer: Observer | None = None) -> SortReport:
    """Standard insertion sort, used as the benchmark baseline.

    Scans for the insertion point from the end of the sorted region and
    stops as soon as it is found.  Element shifts are modeled as
    adjacent exchanges and reported as swap events, so the count is
    comparable with the other sorters' swap counts; the report labels
    the field "moves".  Stable: equal keys keep their input order.
    """
    a = list(values)
    n = len(a)
    obs = observer
    comparisons = 0
    moves = 0
    seq = 0
    for i in range(1, n):
        k = i
        ak = a[k]
        while k > 0:
            left = a[k - 1]
            comparisons += 1
            if obs is not None:
                obs(TraceEvent(seq, KIND_COMPARE, k + 1, k, PHASE_NA))
                seq += 1
            if ak < left:
                a[k] = left
                a[k - 1] = ak
                moves += 1
                if obs is not None:
                    obs(TraceEvent(seq, KIND_SWAP, k + 1, k, PHASE_NA))
                    seq += 1
                k -= 1
            else:
                break
    return SortReport("std-insertion", n, comparisons, moves, a, swap_label="moves")


def replay_trace(values: Sequence[Key], events: Sequence[TraceEvent]) -> list:
    """Re-apply a recorded trace to a copy of ``values``.

    Swap events exchange the named 1-based positions; comparison events
    carry no state change.  Replaying a full trace reproduces the
    originating run's output exactly.
    """
    work = list(values)
    for event in events:
        if event.kind == KIND_SWAP:
            i = event.i - 1
            j = event.j - 1
            work[i], work[j] = work[j], work[i]
    return work


@dataclass(frozen=True)
class AlgorithmInfo:
    """Registry entry: callable plus the facts the CLI needs."""

    name: str
    func: Callable[..., SortReport]
    descending: bool
    swap_label: str = "swaps"


ALGORITHMS: dict[str, AlgorithmInfo] = {
    "icbics": AlgorithmInfo("icbics", icbics_sort, descending=False),
    "exchange": AlgorithmInfo("exchange", exchange_sort, descending=False),
    "improved": AlgorithmInfo("improved", improved_sort, descending=False),
    "icbics-desc-ineq": AlgorithmInfo("icbics-desc-ineq", icbics_desc_ineq, descending=True),
    "icbics-desc-loops": AlgorithmInfo("icbics-desc-loops", icbics_desc_loopswap, descending=True),
    "std-insertion": AlgorithmInfo("std-insertion", std_insertion_sort, descending=False, swap_label="moves"),
}
