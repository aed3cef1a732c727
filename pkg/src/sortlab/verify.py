"""Per-run checkers for the double-loop sort's structural claims.

Each check runs ``icbics_sort`` on one input and validates a claimed
property of the run: the sorted-prefix invariant after every outer
pass, the +1/-1 inversion delta of every swap, the closed-form swap
bounds, or (by search over tagged inputs) the fact that the sort is
not stable.  Checks return a :class:`VerificationVerdict`; a failing
verdict always carries a replayable counterexample.

Checks that assume distinct elements raise ``ValueError`` when handed
duplicates instead of producing an undefined verdict.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence

from .metrics import count_inversions, max_inversions
from .sortcore import (
    PHASE_SELECTION,
    TraceRecorder,
    icbics_sort,
)

CHECK_IDS = ("correctness", "pi", "lemma1", "theorem2", "theorem3", "theorem4", "instability")


@dataclass(frozen=True)
class VerificationVerdict:
    """Outcome of one named check on one input.

    ``counterexample`` is None on a pass; on a failure it is a
    JSON-ready dict holding at least the input plus the location of the
    violation (failing outer index or event seq) and the expected vs
    observed values, enough to reproduce the failure by re-running the
    same check.
    """

    check_id: str
    passed: bool
    counterexample: Optional[dict] = None


def _require_distinct(values: Sequence, check_id: str) -> None:
    if len(set(values)) != len(values):
        raise ValueError(f"{check_id} check requires distinct elements, got duplicates: {list(values)!r}")


def check_pi_invariant(values: Sequence[int]) -> VerificationVerdict:
    """After each outer pass i, the prefix A[1..i] must be sorted and
    A[i] must be the maximum of the whole array.

    Runs ``icbics_sort``, replays its trace, and asserts both facts at
    every outer-pass boundary (n assertions for length n).
    """
    _require_distinct(values, "pi")
    recorder = TraceRecorder()
    icbics_sort(values, recorder)

    work = list(values)
    top = max(work) if work else None

    def violation(outer: int) -> Optional[dict]:
        # Prefix work[0 .. outer-1] sorted, and work[outer-1] is the array max.
        prefix = work[:outer]
        for p in range(outer - 1):
            if prefix[p] > prefix[p + 1]:
                return {
                    "input": list(values),
                    "outer": outer,
                    "expected": "non-decreasing prefix",
                    "observed": list(prefix),
                }
        if work[outer - 1] != top:
            return {
                "input": list(values),
                "outer": outer,
                "expected": top,
                "observed": work[outer - 1],
            }
        return None

    current = None
    for event in recorder.events:
        if event.i != current:
            if current is not None:
                bad = violation(current)
                if bad is not None:
                    return VerificationVerdict("pi", False, bad)
            current = event.i
        if event.kind == "swap":
            i, j = event.i - 1, event.j - 1
            work[i], work[j] = work[j], work[i]
    if current is not None:
        bad = violation(current)
        if bad is not None:
            return VerificationVerdict("pi", False, bad)
    return VerificationVerdict("pi", True)


def check_lemma1(values: Sequence[int]) -> VerificationVerdict:
    """Every selection-phase swap must raise the inversion count by
    exactly one and every insertion-phase swap must lower it by exactly
    one.  Inversions are recounted by full pair scan around each swap.
    """
    _require_distinct(values, "lemma1")
    recorder = TraceRecorder()
    icbics_sort(values, recorder)

    work = list(values)
    for event in recorder.events:
        if event.kind != "swap":
            continue
        before = count_inversions(work)
        i, j = event.i - 1, event.j - 1
        work[i], work[j] = work[j], work[i]
        after = count_inversions(work)
        expected = 1 if event.phase == PHASE_SELECTION else -1
        if after - before != expected:
            return VerificationVerdict(
                "lemma1",
                False,
                {
                    "input": list(values),
                    "seq": event.seq,
                    "phase": event.phase,
                    "expected": expected,
                    "observed": after - before,
                },
            )
    return VerificationVerdict("lemma1", True)


def check_theorem_bounds(values: Sequence[int]) -> VerificationVerdict:
    """One run's swap count must fall inside all three closed-form
    bounds: at most ``n(n-1)/2 + 1``, at most ``I + 2(n-1)`` for input
    inversion count I, and at least ``n - 1``.
    """
    _require_distinct(values, "theorem_bounds")
    n = len(values)
    if n < 2:
        raise ValueError(f"theorem bounds need n >= 2, got n={n}")
    inv = count_inversions(values)
    swaps = icbics_sort(values).swaps

    violated = []
    if swaps > max_inversions(n) + 1:
        violated.append("theorem2")
    if swaps > inv + 2 * (n - 1):
        violated.append("theorem3")
    if swaps < n - 1:
        violated.append("theorem4")
    if violated:
        return VerificationVerdict(
            "theorem_bounds",
            False,
            {
                "input": list(values),
                "inversions": inv,
                "swaps": swaps,
                "violated": violated,
            },
        )
    return VerificationVerdict("theorem_bounds", True)


class Tagged:
    """A sort key carrying a tag that takes no part in comparisons.

    Only ``<`` is defined, and it compares keys alone, so sorting a list
    of Tagged values orders by key while the tags record where each
    element started.
    """

    __slots__ = ("key", "tag")

    def __init__(self, key: int, tag: str) -> None:
        self.key = key
        self.tag = tag

    def __lt__(self, other: "Tagged") -> bool:
        return self.key < other.key

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Tagged) and (self.key, self.tag) == (other.key, other.tag)

    def __hash__(self) -> int:
        return hash((self.key, self.tag))

    def __repr__(self) -> str:
        return f"({self.key}, {self.tag!r})"


@dataclass(frozen=True)
class InstabilityWitness:
    """A tagged input on which the sort reorders equal keys.

    ``input`` and ``output`` are (key, tag) pairs, tags assigned a, b,
    c, ... in input order.  ``violated_pair`` gives two 0-based output
    positions holding equal keys whose tags appear in the opposite of
    their input order.
    """

    input: list[tuple[int, str]]
    output: list[tuple[int, str]]
    violated_pair: tuple[int, int]


def _tag_inversion(pairs: list[tuple[int, str]]) -> Optional[tuple[int, int]]:
    # Tags were assigned alphabetically in input order, so among equal
    # keys any tag pair out of alphabetical order marks an inversion.
    n = len(pairs)
    for p in range(n):
        key_p, tag_p = pairs[p]
        for q in range(p + 1, n):
            key_q, tag_q = pairs[q]
            if key_p == key_q and tag_p > tag_q:
                return p, q
    return None


def sort_tagged(keys: Sequence[int]) -> tuple[list[tuple[int, str]], list[tuple[int, str]]]:
    """Run ``icbics_sort`` on ``keys`` tagged a, b, c, ... in input
    order, comparing keys only.  Returns (tagged input, tagged output).
    """
    tagged = [Tagged(key, string.ascii_lowercase[pos]) for pos, key in enumerate(keys)]
    report = icbics_sort(tagged)
    as_pairs = [(t.key, t.tag) for t in tagged]
    out_pairs = [(t.key, t.tag) for t in report.output]
    return as_pairs, out_pairs


def find_instability_witness(max_n: int) -> Optional[InstabilityWitness]:
    """Search for an input on which the sort breaks stability.

    Enumerates key tuples over {1, 2, 3} with at least one duplicate,
    lengths 2 through ``max_n``, in lexicographic order, tags assigned
    a, b, c, ... by input position.  Returns the first input whose run
    leaves two equal keys with inverted tags, or None if none exists up
    to ``max_n``.
    """
    if max_n < 2:
        raise ValueError(f"witness search needs max_n >= 2, got {max_n}")
    if max_n > len(string.ascii_lowercase):
        raise ValueError(f"witness search supports max_n <= 26, got {max_n}")
    for n in range(2, max_n + 1):
        for keys in product((1, 2, 3), repeat=n):
            if len(set(keys)) == n:
                continue
            in_pairs, out_pairs = sort_tagged(keys)
            pair = _tag_inversion(out_pairs)
            if pair is not None:
                return InstabilityWitness(in_pairs, out_pairs, pair)
    return None
