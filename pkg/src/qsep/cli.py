"""Command-line front end: check states from JSON files, emit machine-readable reports.

State file format (consumed and produced here)::

    {"n": <int>, "amplitudes": [[re, im], ...]}

with exactly 2**n [real, imaginary] pairs of decimal floating-point
literals.  Every command prints a single JSON report to stdout and
diagnostics to stderr.  Exit codes: 0 separable (or command succeeded),
1 not separable, 2 input error, 3 oracle disagreement under --verify.
Reports are byte-identical across runs except the timing_ns field.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict
from typing import Any

import numpy as np

from .decomposition import FactorTree, decompose
from .errors import QsepError
from .fullsep import (
    DEFAULT_TOL_PP,
    DEFAULT_TOL_ZERO,
    FullSepReport,
    amplitude_abstraction,
    is_fully_separable,
)
from .oracle import oracle_fully_separable, oracle_pq
from .pqsep import PqReport, is_pq_separable, is_pq_separable_subset
from .state import (
    DEFAULT_TOL_NORM,
    PureState,
    make_state,
    permute_qubits,
    random_structured_state,
)

# Base seed for bench state generation; bumped per n until full support.
BENCH_SEED = 20260801


class CliInputError(Exception):
    """Anything wrong with files, flags, or their combination; maps to exit 2."""


def load_state(path: str) -> PureState:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as e:
        raise CliInputError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise CliInputError(f"{path} is not valid JSON: {e}") from e
    if not isinstance(doc, dict) or "n" not in doc or "amplitudes" not in doc:
        raise CliInputError(f"{path}: expected an object with 'n' and 'amplitudes'")
    n = doc["n"]
    amps = doc["amplitudes"]
    if not isinstance(n, int) or n < 1:
        raise CliInputError(f"{path}: 'n' must be an integer >= 1, got {n!r}")
    if not isinstance(amps, list):
        raise CliInputError(f"{path}: 'amplitudes' must be a list")
    try:
        arr = np.array([complex(float(re), float(im)) for re, im in amps], dtype=np.complex128)
    except (TypeError, ValueError) as e:
        raise CliInputError(f"{path}: each amplitude must be a [re, im] pair: {e}") from e
    try:
        return make_state(n, arr)
    except QsepError as e:
        raise CliInputError(f"{path}: {e}") from e


def state_to_json(state: PureState) -> dict[str, Any]:
    return {
        "n": state.n,
        "amplitudes": [[float(a.real), float(a.imag)] for a in state.amplitudes],
    }


def save_state(path: str, state: PureState) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(state_to_json(state), fh)
        fh.write("\n")


def _complex_pair(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def _witness_json(witness: Any) -> Any:
    if witness is None:
        return None
    payload = {"type": type(witness).__name__}
    for key, value in asdict(witness).items():
        payload[key] = _complex_pair(value) if isinstance(value, complex) else value
    return payload


def _fullsep_json(report: FullSepReport) -> dict[str, Any]:
    return {
        "separable": report.separable,
        "reason": report.reason.value,
        "witness": _witness_json(report.witness),
        "factors": None if report.factors is None else
        [[_complex_pair(f.amp0), _complex_pair(f.amp1)] for f in report.factors],
    }


def _pq_json(report: PqReport) -> dict[str, Any]:
    return {
        "separable": report.separable,
        "p": report.p,
        "q": report.q,
        "witness": _witness_json(report.witness),
        "factors": None if report.factors is None else
        [state_to_json(report.factors[0]), state_to_json(report.factors[1])],
        "permutation": None if report.permutation is None else list(report.permutation),
    }


def _tree_json(tree: FactorTree) -> dict[str, Any]:
    return {
        "blocks": [{"qubits": list(b.qubits), "state": state_to_json(b.state)}
                   for b in tree.blocks],
        "permutation": list(tree.permutation),
    }


def _digest(state: PureState, tol_zero: float) -> dict[str, Any]:
    return {
        "n": state.n,
        "norm": state.norm(),
        "popcount": amplitude_abstraction(state, tol_zero).popcount,
    }


def _emit(report: dict[str, Any]) -> None:
    print(json.dumps(report, sort_keys=True))


def cmd_check_full(args: argparse.Namespace) -> int:
    state = load_state(args.file)
    t0 = time.perf_counter_ns()
    report = is_fully_separable(state, args.tol_zero, args.tol_pp)
    elapsed = time.perf_counter_ns() - t0
    out = {
        "command": "check-full",
        "input": _digest(state, args.tol_zero),
        "tolerances": {"tol_zero": args.tol_zero, "tol_pp": args.tol_pp},
        "result": _fullsep_json(report),
        "counters": {
            "products": report.products,
            "pair_comparisons": report.pair_comparisons,
            "wf_comparisons": report.wf_comparisons,
        },
        "timing_ns": elapsed,
    }
    code = 0 if report.separable else 1
    if args.verify:
        oracle_sep = oracle_fully_separable(state)
        agrees = oracle_sep == report.separable
        out["oracle"] = {"separable": oracle_sep, "agrees": agrees}
        if not agrees:
            _emit(out)
            print(f"verify: oracle says separable={oracle_sep}, test says {report.separable}",
                  file=sys.stderr)
            return 3
    _emit(out)
    return code


def _parse_subset(text: str, n: int) -> set[int]:
    try:
        subset = {int(tok) for tok in text.split(",") if tok.strip() != ""}
    except ValueError as e:
        raise CliInputError(f"--subset must be a comma-separated qubit list: {e}") from e
    if not subset or any(q < 0 or q >= n for q in subset) or len(subset) >= n:
        raise CliInputError(f"--subset must be a nonempty proper subset of 0..{n - 1}")
    return subset


def cmd_check_pq(args: argparse.Namespace) -> int:
    state = load_state(args.file)
    subset: set[int] | None = None
    if args.subset is not None:
        subset = _parse_subset(args.subset, state.n)
        if args.p is not None and args.p != len(subset):
            raise CliInputError(f"--p {args.p} contradicts --subset of size {len(subset)}")
    elif args.p is None:
        raise CliInputError("one of --p or --subset is required")
    t0 = time.perf_counter_ns()
    try:
        if subset is not None:
            report = is_pq_separable_subset(state, subset, args.tol_zero, args.tol_pp)
        else:
            report = is_pq_separable(state, args.p, args.tol_zero, args.tol_pp)
    except QsepError as e:
        raise CliInputError(str(e)) from e
    elapsed = time.perf_counter_ns() - t0
    out = {
        "command": "check-pq",
        "input": _digest(state, args.tol_zero),
        "tolerances": {"tol_zero": args.tol_zero, "tol_pp": args.tol_pp},
        "result": _pq_json(report),
        "counters": {"comparisons": report.comparisons},
        "timing_ns": elapsed,
    }
    code = 0 if report.separable else 1
    if args.verify:
        probe = state if subset is None else permute_qubits(state, report.permutation)
        oracle_sep = oracle_pq(probe, report.p)
        agrees = oracle_sep == report.separable
        out["oracle"] = {"separable": oracle_sep, "agrees": agrees}
        if not agrees:
            _emit(out)
            print(f"verify: oracle says separable={oracle_sep}, test says {report.separable}",
                  file=sys.stderr)
            return 3
    _emit(out)
    return code


def cmd_decompose(args: argparse.Namespace) -> int:
    state = load_state(args.file)
    t0 = time.perf_counter_ns()
    try:
        tree = decompose(state, args.tol_zero, args.tol_pp)
    except QsepError as e:
        raise CliInputError(str(e)) from e
    elapsed = time.perf_counter_ns() - t0
    out = {
        "command": "decompose",
        "input": _digest(state, args.tol_zero),
        "tolerances": {"tol_zero": args.tol_zero, "tol_pp": args.tol_pp},
        "result": _tree_json(tree),
        "counters": {"blocks": len(tree.blocks)},
        "timing_ns": elapsed,
    }
    _emit(out)
    return 0


def cmd_random(args: argparse.Namespace) -> int:
    try:
        blocks = [int(tok) for tok in args.blocks.split(",") if tok.strip() != ""]
    except ValueError as e:
        raise CliInputError(f"--blocks must be a comma-separated size list: {e}") from e
    if not blocks or any(b < 1 for b in blocks):
        raise CliInputError("--blocks entries must be positive integers")
    if args.n is not None and args.n != sum(blocks):
        raise CliInputError(f"--n {args.n} does not match sum of --blocks {sum(blocks)}")
    state = random_structured_state(blocks, args.seed)
    save_state(args.out, state)
    out = {
        "command": "random",
        "blocks": blocks,
        "seed": args.seed,
        "out": args.out,
        "input": _digest(state, DEFAULT_TOL_ZERO),
        "timing_ns": 0,
    }
    _emit(out)
    return 0


def _bench_state(n: int) -> PureState:
    """Full-support random product state; seed bumped until no amplitude underflows."""
    seed = BENCH_SEED + n
    while True:
        state = random_structured_state([1] * n, seed)
        if amplitude_abstraction(state).popcount == state.dim:
            return state
        seed += 1


def cmd_bench(args: argparse.Namespace) -> int:
    if args.n_min < 1 or args.n_max < args.n_min:
        raise CliInputError(f"need 1 <= --n-min <= --n-max, got {args.n_min}..{args.n_max}")
    if args.reps < 1:
        raise CliInputError("--reps must be >= 1")
    rows = []
    for n in range(args.n_min, args.n_max + 1):
        state = _bench_state(n)
        times = []
        report = None
        for _ in range(args.reps):
            t0 = time.perf_counter_ns()
            report = is_fully_separable(state)
            times.append(time.perf_counter_ns() - t0)
        rows.append({
            "n": n,
            "mean_time_ns": int(sum(times) / len(times)),
            "products": report.products,
            "pair_comparisons": report.pair_comparisons,
            "wf_comparisons": report.wf_comparisons,
        })
    out = {
        "command": "bench",
        "tolerances": {"tol_zero": DEFAULT_TOL_ZERO, "tol_pp": DEFAULT_TOL_PP},
        "result": {"rows": rows, "reps": args.reps},
        "timing_ns": 0,
    }
    _emit(out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsep",
        description="Separability tests and tensor factorization for pure n-qubit statevectors.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_tolerances(p: argparse.ArgumentParser) -> None:
        p.add_argument("--tol-zero", type=float, default=DEFAULT_TOL_ZERO,
                       help="magnitude below which an amplitude counts as zero")
        p.add_argument("--tol-pp", type=float, default=DEFAULT_TOL_PP,
                       help="relative tolerance for product comparisons")

    p_full = sub.add_parser("check-full", help="test full separability of a state file")
    p_full.add_argument("file")
    add_tolerances(p_full)
    p_full.add_argument("--verify", action="store_true",
                        help="cross-check against the rank-1 oracle (exit 3 on disagreement)")
    p_full.set_defaults(func=cmd_check_full)

    p_pq = sub.add_parser("check-pq", help="test p-q separability of a state file")
    p_pq.add_argument("file")
    p_pq.add_argument("--p", type=int, default=None, help="qubits in the left factor")
    p_pq.add_argument("--subset", default=None,
                      help="comma-separated qubit indices forming the left factor")
    add_tolerances(p_pq)
    p_pq.add_argument("--verify", action="store_true",
                      help="cross-check against the rank-1 oracle (exit 3 on disagreement)")
    p_pq.set_defaults(func=cmd_check_pq)

    p_dec = sub.add_parser("decompose", help="finest factorization into irreducible blocks")
    p_dec.add_argument("file")
    add_tolerances(p_dec)
    p_dec.set_defaults(func=cmd_decompose)

    p_rand = sub.add_parser("random", help="write a random block-product state file")
    p_rand.add_argument("--n", type=int, default=None, help="total qubits (must match --blocks)")
    p_rand.add_argument("--blocks", required=True, help="comma-separated block sizes")
    p_rand.add_argument("--seed", type=int, required=True)
    p_rand.add_argument("--out", required=True)
    p_rand.set_defaults(func=cmd_random)

    p_bench = sub.add_parser("bench", help="time check-full on full-support product states")
    p_bench.add_argument("--n-min", type=int, required=True)
    p_bench.add_argument("--n-max", type=int, required=True)
    p_bench.add_argument("--reps", type=int, default=3)
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliInputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
