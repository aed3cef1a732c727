"""Command-line front end.

Three subcommands: ``sort`` runs one algorithm on one input and prints
a JSON report, ``verify`` runs the property checks and prints a JSON
verdict, ``bench`` times every algorithm and emits per-run records.

Exit codes: 0 on success (for ``verify``, only when every selected
check passed), 1 when a verification check fails, 2 on usage or input
errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
import time
from dataclasses import asdict, dataclass
from functools import lru_cache
from itertools import product
from pathlib import Path
from statistics import fmean
from typing import Optional, Sequence

from .metrics import max_inversions
from .oracle import (
    EXHAUSTIVE_CAP,
    OracleSummary,
    enumerate_permutations,
    exhaustive_summary,
    random_suite,
    theorem2_extremal_inputs,
    theorem4_extremal_input,
)
from .sortcore import ALGORITHMS, TraceEvent, TraceRecorder, icbics_sort
from .verify import (
    CHECK_IDS,
    check_lemma1,
    check_pi_invariant,
    check_theorem_bounds,
    find_instability_witness,
)

# Length of the random permutations drawn when verify is given
# --samples; large enough that the bounds are not trivially loose,
# small enough that thousands of runs stay cheap.
RANDOM_SUITE_N = 64

BENCH_COLUMNS = ("algorithm", "n", "rep", "seed", "comparisons", "swaps", "wall_ns")


# ---------------------------------------------------------------- sort


def parse_int_values(text: str) -> list[int]:
    """Parse integers from either format: one per line, or a single
    comma-separated line.  Blank input means an empty list.
    """
    stripped = text.strip()
    if not stripped:
        return []
    if "," in stripped:
        tokens = [tok.strip() for tok in stripped.split(",")]
    else:
        tokens = stripped.split()
    return [int(tok) for tok in tokens]


def _read_input_values(source: str) -> list[int]:
    # If the argument names an existing file, read values from it;
    # otherwise treat the argument itself as inline values.
    path = Path(source)
    if path.is_file():
        return parse_int_values(path.read_text(encoding="utf-8"))
    return parse_int_values(source)


def write_trace(path: str, events: Sequence[TraceEvent]) -> None:
    """Write events as JSON lines, one object per event."""
    with open(path, "w", encoding="utf-8") as fh:
        for event in events:
            fh.write(
                json.dumps(
                    {
                        "seq": event.seq,
                        "kind": event.kind,
                        "i": event.i,
                        "j": event.j,
                        "phase": event.phase,
                    }
                )
            )
            fh.write("\n")


def load_trace(path: str) -> list[TraceEvent]:
    """Read a JSON-lines trace back into events."""
    events = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            raw = json.loads(line)
            events.append(TraceEvent(raw["seq"], raw["kind"], raw["i"], raw["j"], raw["phase"]))
    return events


def _is_sorted(values: Sequence, descending: bool) -> bool:
    pairs = list(zip(values, values[1:]))
    if descending:
        return all(x >= y for x, y in pairs)
    return all(x <= y for x, y in pairs)


def cmd_sort(args: argparse.Namespace) -> int:
    try:
        values = _read_input_values(args.input)
    except (OSError, ValueError) as err:
        print(f"sortlab sort: cannot read input: {err}", file=sys.stderr)
        return 2
    info = ALGORITHMS[args.algo]
    recorder = TraceRecorder() if args.trace else None
    report = info.func(values, recorder)
    if recorder is not None:
        try:
            write_trace(args.trace, recorder.events)
        except OSError as err:
            print(f"sortlab sort: cannot write trace: {err}", file=sys.stderr)
            return 2
    payload = {
        "algorithm": report.algorithm,
        "n": report.n,
        "comparisons": report.comparisons,
        report.swap_label: report.swaps,
        "output": list(report.output),
        "sorted": _is_sorted(report.output, info.descending),
    }
    print(json.dumps(payload))
    return 0


# -------------------------------------------------------------- verify


def _fail(counterexample: Optional[dict], examined: int) -> dict:
    return {
        "passed": False,
        "counterexample": counterexample,
        "details": {"inputs_examined": examined},
    }


def _dup_inputs(n_max: int):
    # Small inputs over a 3-value alphabet exercise duplicate handling,
    # which permutations cannot.
    for n in range(1, min(n_max, 4) + 1):
        yield from product((1, 2, 3), repeat=n)


def _run_check_correctness(n_max: int) -> dict:
    examined = 0
    for n in range(0, n_max + 1):
        for perm in enumerate_permutations(n):
            examined += 1
            report = icbics_sort(perm)
            if report.output != sorted(perm):
                return _fail({"input": list(perm), "output": list(report.output)}, examined)
    for values in _dup_inputs(n_max):
        examined += 1
        report = icbics_sort(values)
        if report.output != sorted(values):
            return _fail({"input": list(values), "output": list(report.output)}, examined)
    return {"passed": True, "counterexample": None, "details": {"inputs_examined": examined}}


def _run_exhaustive_check(check, n_max: int) -> dict:
    examined = 0
    for n in range(1, n_max + 1):
        for perm in enumerate_permutations(n):
            examined += 1
            verdict = check(perm)
            if not verdict.passed:
                return _fail(verdict.counterexample, examined)
    return {"passed": True, "counterexample": None, "details": {"inputs_examined": examined}}


def _run_check_pi(n_max: int) -> dict:
    return _run_exhaustive_check(check_pi_invariant, n_max)


def _run_check_lemma1(n_max: int) -> dict:
    return _run_exhaustive_check(check_lemma1, n_max)


@lru_cache(maxsize=None)
def _summary(n: int) -> OracleSummary:
    return exhaustive_summary(n)


def _run_check_theorem2(n_max: int) -> dict:
    per_n = {}
    for n in range(2, n_max + 1):
        summary = _summary(n)
        expected = max_inversions(n) + 1
        if summary.max_swaps != expected:
            return {
                "passed": False,
                "counterexample": {"n": n, "max_swaps": summary.max_swaps, "expected": expected},
                "details": {"per_n": per_n},
            }
        if n >= 3:
            wanted = sorted(theorem2_extremal_inputs(n))
            if summary.argmax_inputs != wanted:
                return {
                    "passed": False,
                    "counterexample": {
                        "n": n,
                        "argmax_inputs": [list(p) for p in summary.argmax_inputs],
                        "expected": [list(p) for p in wanted],
                    },
                    "details": {"per_n": per_n},
                }
        per_n[str(n)] = {
            "max_swaps": summary.max_swaps,
            "argmax_inputs": [list(p) for p in summary.argmax_inputs],
        }
    return {"passed": True, "counterexample": None, "details": {"per_n": per_n}}


def _run_check_theorem3(n_max: int) -> dict:
    examined = 0
    for n in range(2, n_max + 1):
        for perm in enumerate_permutations(n):
            examined += 1
            verdict = check_theorem_bounds(perm)
            if not verdict.passed and "theorem3" in verdict.counterexample["violated"]:
                return _fail(verdict.counterexample, examined)
        # The bound is tight exactly at the already-sorted input.
        sorted_cost = icbics_sort(range(1, n + 1)).swaps
        if sorted_cost != 2 * (n - 1):
            return {
                "passed": False,
                "counterexample": {
                    "input": list(range(1, n + 1)),
                    "swaps": sorted_cost,
                    "expected": 2 * (n - 1),
                },
                "details": {"inputs_examined": examined},
            }
    return {
        "passed": True,
        "counterexample": None,
        "details": {"inputs_examined": examined, "edge_case": "sorted input costs exactly 2(n-1) swaps at every n checked"},
    }


def _run_check_theorem4(n_max: int) -> dict:
    per_n = {}
    examined = 0
    for n in range(2, n_max + 1):
        for perm in enumerate_permutations(n):
            examined += 1
            verdict = check_theorem_bounds(perm)
            if not verdict.passed and "theorem4" in verdict.counterexample["violated"]:
                return _fail(verdict.counterexample, examined)
        summary = _summary(n)
        wanted = [theorem4_extremal_input(n)]
        if summary.min_swaps != n - 1 or summary.argmin_inputs != wanted:
            return {
                "passed": False,
                "counterexample": {
                    "n": n,
                    "min_swaps": summary.min_swaps,
                    "argmin_inputs": [list(p) for p in summary.argmin_inputs],
                    "expected_min": n - 1,
                    "expected_argmin": [list(p) for p in wanted],
                },
                "details": {"per_n": per_n},
            }
        per_n[str(n)] = {
            "min_swaps": summary.min_swaps,
            "argmin_inputs": [list(p) for p in summary.argmin_inputs],
        }
    return {
        "passed": True,
        "counterexample": None,
        "details": {"per_n": per_n, "inputs_examined": examined},
    }


def _run_check_instability(n_max: int) -> dict:
    # Witnesses need duplicate keys, and a 3-element search already
    # succeeds, so there is no point scanning past length 3.
    limit = max(2, min(n_max, 3))
    witness = find_instability_witness(limit)
    if witness is None:
        return {
            "passed": False,
            "counterexample": {"searched_up_to": limit, "witness": None},
            "details": {"searched_up_to": limit},
        }
    return {
        "passed": True,
        "counterexample": None,
        "details": {
            "searched_up_to": limit,
            "witness": {
                "input": [[key, tag] for key, tag in witness.input],
                "output": [[key, tag] for key, tag in witness.output],
                "violated_pair": list(witness.violated_pair),
            },
        },
    }


_RUNNERS = {
    "correctness": _run_check_correctness,
    "pi": _run_check_pi,
    "lemma1": _run_check_lemma1,
    "theorem2": _run_check_theorem2,
    "theorem3": _run_check_theorem3,
    "theorem4": _run_check_theorem4,
    "instability": _run_check_instability,
}


def cmd_verify(args: argparse.Namespace) -> int:
    if not 1 <= args.n_max <= EXHAUSTIVE_CAP:
        print(
            f"sortlab verify: --n-max must be between 1 and {EXHAUSTIVE_CAP}, got {args.n_max}",
            file=sys.stderr,
        )
        return 2
    if args.samples < 0:
        print(f"sortlab verify: --samples must be >= 0, got {args.samples}", file=sys.stderr)
        return 2
    selected = args.checks if args.checks is not None else list(CHECK_IDS)
    results = {}
    all_passed = True
    for check_id in selected:
        outcome = _RUNNERS[check_id](args.n_max)
        results[check_id] = outcome
        all_passed = all_passed and outcome["passed"]
    payload = {"n_max": args.n_max, "checks": results}
    if args.samples >= 1:
        suite = random_suite(RANDOM_SUITE_N, args.samples, args.seed)
        suite_ok = suite.bound_violations == 0
        payload["random_suite"] = {
            "n": suite.n,
            "samples": suite.inputs_examined,
            "seed": suite.seed,
            "bound_violations": suite.bound_violations,
            "max_swaps": suite.max_swaps,
            "min_swaps": suite.min_swaps,
            "passed": suite_ok,
        }
        all_passed = all_passed and suite_ok
    payload["all_passed"] = all_passed
    print(json.dumps(payload, indent=2))
    return 0 if all_passed else 1


# --------------------------------------------------------------- bench


@dataclass(frozen=True)
class BenchRecord:
    """One timed run.  ``swaps`` holds the algorithm's exchange count
    (move count for std-insertion); ``wall_ns`` wraps the sort call
    only, not input generation."""

    algorithm: str
    n: int
    rep: int
    seed: int
    comparisons: int
    swaps: int
    wall_ns: int


def collect_bench_records(
    sizes: Sequence[int],
    reps: int,
    seed: int,
    algorithms: Optional[Sequence[str]] = None,
) -> list[BenchRecord]:
    """Time the requested algorithms (default: all) on seeded shuffles.

    One shuffled permutation of 1..n is drawn per (size, rep), and every
    algorithm sorts its own copy of it, so records sharing n and rep saw
    identical data.  Count columns are deterministic for a fixed seed.
    """
    names = list(algorithms) if algorithms is not None else list(ALGORITHMS)
    for name in names:
        if name not in ALGORITHMS:
            raise ValueError(f"unknown algorithm id: {name}")
    if reps < 1:
        raise ValueError(f"reps must be >= 1, got {reps}")
    rng = random.Random(seed)
    records = []
    for n in sizes:
        if n < 0:
            raise ValueError(f"sizes must be >= 0, got {n}")
        for rep in range(reps):
            data = list(range(1, n + 1))
            rng.shuffle(data)
            for name in names:
                func = ALGORITHMS[name].func
                start = time.perf_counter_ns()
                report = func(data)
                wall_ns = time.perf_counter_ns() - start
                records.append(
                    BenchRecord(name, n, rep, seed, report.comparisons, report.swaps, wall_ns)
                )
    return records


def write_bench_csv(records: Sequence[BenchRecord], stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(BENCH_COLUMNS)
    for r in records:
        writer.writerow([r.algorithm, r.n, r.rep, r.seed, r.comparisons, r.swaps, r.wall_ns])


def read_bench_csv(text: str) -> list[BenchRecord]:
    """Parse bench CSV back into records; exact inverse of the writer."""
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or rows[0] != list(BENCH_COLUMNS):
        raise ValueError("not a bench CSV: missing or unexpected header")
    return [
        BenchRecord(algorithm, int(n), int(rep), int(seed), int(comparisons), int(swaps), int(wall_ns))
        for algorithm, n, rep, seed, comparisons, swaps, wall_ns in rows[1:]
    ]


def summarize_bench(records: Sequence[BenchRecord]) -> dict[str, dict]:
    """Per-algorithm run counts and mean comparison/swap/wall figures."""
    grouped: dict[str, list[BenchRecord]] = {}
    for record in records:
        grouped.setdefault(record.algorithm, []).append(record)
    return {
        name: {
            "runs": len(group),
            "mean_comparisons": fmean(r.comparisons for r in group),
            "mean_swaps": fmean(r.swaps for r in group),
            "mean_wall_ns": fmean(r.wall_ns for r in group),
        }
        for name, group in grouped.items()
    }


def cmd_bench(args: argparse.Namespace) -> int:
    if args.reps < 1:
        print(f"sortlab bench: --reps must be >= 1, got {args.reps}", file=sys.stderr)
        return 2
    if not args.sizes:
        print("sortlab bench: --sizes must name at least one input length", file=sys.stderr)
        return 2
    if any(n < 0 for n in args.sizes):
        print(f"sortlab bench: sizes must be >= 0, got {args.sizes}", file=sys.stderr)
        return 2
    records = collect_bench_records(args.sizes, args.reps, args.seed)
    summary = summarize_bench(records)
    if args.format == "csv":
        write_bench_csv(records, sys.stdout)
        for name, stats in summary.items():
            print(
                f"{name}: {stats['runs']} runs, mean comparisons {stats['mean_comparisons']:.1f}, "
                f"mean swaps {stats['mean_swaps']:.1f}, mean wall {stats['mean_wall_ns']:.0f} ns",
                file=sys.stderr,
            )
    else:
        payload = {"records": [asdict(r) for r in records], "summary": summary}
        print(json.dumps(payload, indent=2))
    return 0


# ---------------------------------------------------------------- glue


def _check_ids(text: str) -> list[str]:
    names = [tok.strip() for tok in text.split(",") if tok.strip()]
    if not names:
        raise argparse.ArgumentTypeError("no check names given")
    unknown = sorted(set(names) - set(CHECK_IDS))
    if unknown:
        raise argparse.ArgumentTypeError(
            f"unknown checks: {', '.join(unknown)}; valid: {', '.join(CHECK_IDS)}"
        )
    return names


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok.strip()) for tok in text.split(",") if tok.strip()]
    except ValueError as err:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from err


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sortlab",
        description="Instrumented playground for a double-loop sort that looks wrong and isn't.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sort = sub.add_parser("sort", help="sort one input and print a JSON report")
    p_sort.add_argument(
        "--algo",
        choices=list(ALGORITHMS),
        default="icbics",
        help="algorithm id (default: %(default)s)",
    )
    p_sort.add_argument(
        "--input",
        required=True,
        help="comma-separated integers, or a path to a file holding one integer per line "
        "(or one comma-separated line)",
    )
    p_sort.add_argument("--trace", metavar="PATH", help="also write the event trace to PATH as JSON lines")
    p_sort.set_defaults(handler=cmd_sort)

    p_verify = sub.add_parser("verify", help="run the property checks and print a JSON verdict")
    p_verify.add_argument(
        "--checks",
        type=_check_ids,
        default=None,
        metavar="IDS",
        help="comma-separated subset of: " + ", ".join(CHECK_IDS) + " (default: all)",
    )
    p_verify.add_argument(
        "--n-max",
        dest="n_max",
        type=int,
        default=7,
        help="exhaustive checks cover every permutation up to this length, 2..8 (default: %(default)s)",
    )
    p_verify.add_argument(
        "--samples",
        type=int,
        default=0,
        help=f"additionally bound-check this many seeded random permutations of 1..{RANDOM_SUITE_N} "
        "(default: %(default)s)",
    )
    p_verify.add_argument("--seed", type=int, default=0, help="seed for --samples (default: %(default)s)")
    p_verify.set_defaults(handler=cmd_verify)

    p_bench = sub.add_parser("bench", help="time every algorithm and emit per-run records")
    p_bench.add_argument(
        "--sizes",
        type=_int_list,
        default=[16, 64, 128],
        metavar="N,N,...",
        help="comma-separated input lengths (default: 16,64,128)",
    )
    p_bench.add_argument("--reps", type=int, default=3, help="repetitions per size (default: %(default)s)")
    p_bench.add_argument("--seed", type=int, default=0, help="shuffle seed (default: %(default)s)")
    p_bench.add_argument(
        "--format",
        choices=("csv", "json"),
        default="csv",
        help="output format; csv prints records to stdout and a summary to stderr (default: %(default)s)",
    )
    p_bench.set_defaults(handler=cmd_bench)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse has already printed a usage message; fold its exit
        # code into the return-value convention so callers never see
        # SystemExit from main().
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 2
    return args.handler(args)


def entry() -> None:
    sys.exit(main(sys.argv[1:]))
