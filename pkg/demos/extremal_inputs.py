"""
Best and worst inputs, by brute force
=====================================

For each n up to 7 this sweeps all n! permutations and reports which
inputs make the double-loop sort swap the most and the least.  The
punchlines: the already-sorted array is nearly the worst input, the
overall maximum n(n-1)/2 + 1 is hit by exactly two inputs, and the
minimum n - 1 is hit by exactly one.
"""

from sortlab import (
    exhaustive_summary,
    icbics_sort,
    max_inversions,
    theorem2_extremal_inputs,
    theorem4_extremal_input,
)

for n in range(2, 8):
    summary = exhaustive_summary(n)
    print(f"n = {n}  ({summary.inputs_examined} permutations)")
    print(f"  max swaps {summary.max_swaps}  (= n(n-1)/2 + 1 = {max_inversions(n) + 1})")
    for inp in summary.argmax_inputs:
        print(f"    attained by {list(inp)}")
    print(f"  min swaps {summary.min_swaps}  (= n - 1)")
    for inp in summary.argmin_inputs:
        print(f"    attained by {list(inp)}")
    if n >= 3:
        assert summary.argmax_inputs == sorted(theorem2_extremal_inputs(n))
    assert summary.argmin_inputs == [theorem4_extremal_input(n)]
    print()

# The sorted input is not the friendly case you might expect.
n = 7
trials = {
    "sorted": list(range(1, n + 1)),
    "reversed": list(range(n, 0, -1)),
    "cheapest": list(theorem4_extremal_input(n)),
    "costliest": list(theorem2_extremal_inputs(n)[0]),
}
print(f"swap counts at n = {n}:")
for label, values in trials.items():
    print(f"  {label:<10} {values}  ->  {icbics_sort(values).swaps} swaps")
