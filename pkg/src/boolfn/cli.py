"""Command-line front door: analyze tables, build majority reports,
run the identity verification sweep, and benchmark the transform.

stdout carries data (JSON by default), stderr carries diagnostics.
Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time
from dataclasses import dataclass

import numpy as np

from .anf import to_anf
from .majority import (
    VERIFY_MAX_K,
    majority,
    majority_report,
    run_length_string,
    verify_identities,
)
from .spectral import check_weight_equals_nonlinearity, walsh_transform
from .truthtable import TruthTable, from_bitstring, from_hex, max_vars, random_table

_RUNLENGTH_MAX_K = 9


@dataclass(frozen=True)
class AnalysisReport:
    """Everything the analyzer measures about one table."""

    n: int
    weight: int
    balanced: bool
    nonlinearity: int | None
    degree: int
    max_abs_walsh: int
    max_abs_walsh_at: int
    anf: str
    weight_equals_nonlinearity: str

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "weight": self.weight,
            "balanced": self.balanced,
            "nonlinearity": self.nonlinearity,
            "degree": self.degree,
            "max_abs_walsh": self.max_abs_walsh,
            "max_abs_walsh_at": self.max_abs_walsh_at,
            "anf": self.anf,
            "weight_equals_nonlinearity": self.weight_equals_nonlinearity,
        }


def analyze_table(t: TruthTable) -> AnalysisReport:
    spectrum = walsh_transform(t)
    verdict = "not-applicable"
    if t.n >= 2:
        verdict = check_weight_equals_nonlinearity(t).verdict
    return AnalysisReport(
        n=t.n,
        weight=t.weight(),
        balanced=t.is_balanced(),
        nonlinearity=spectrum.nonlinearity() if t.n >= 1 else None,
        degree=to_anf(t).degree(),
        max_abs_walsh=spectrum.max_abs(),
        max_abs_walsh_at=spectrum.max_abs_index(),
        anf=to_anf(t).render(),
        weight_equals_nonlinearity=verdict,
    )


def _parse_table(text: str, fmt: str, expect_n: int | None) -> TruthTable:
    if fmt == "auto":
        fmt = "hex" if text.startswith(("0x", "0X")) else "binary"
    t = from_hex(text) if fmt == "hex" else from_bitstring(text)
    if expect_n is not None and t.n != expect_n:
        raise ValueError(f"table has {t.n} variables, expected {expect_n}")
    return t


def _cmd_analyze(args: argparse.Namespace) -> int:
    t = _parse_table(args.tt, args.format, args.n)
    report = analyze_table(t)
    if args.text:
        for key, value in report.to_dict().items():
            print(f"{key}: {value}")
        return 0
    payload = report.to_dict()
    if args.spectrum:
        payload["walsh_spectrum"] = [int(v) for v in walsh_transform(t).values]
    print(json.dumps(payload, indent=2))
    return 0


def _cmd_majority(args: argparse.Namespace) -> int:
    k = args.k
    if args.report:
        rep = majority_report(k)  # raises for k outside 4..VERIFY_MAX_K
        print(json.dumps(rep.to_dict(), indent=2))
        return 0 if rep.all_passed() else 1
    if args.runlength:
        if not 1 <= k <= _RUNLENGTH_MAX_K:
            raise ValueError(f"run-length display supports 1..{_RUNLENGTH_MAX_K} variables")
        print(run_length_string(majority(k)))
        return 0
    print(majority(k).to_bitstring())
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if not 4 <= args.max_k <= VERIFY_MAX_K:
        raise ValueError(f"--max-k must be in 4..{VERIFY_MAX_K}, got {args.max_k}")
    failures = []
    for k in range(4, args.max_k + 1):
        rep = majority_report(k)
        if not rep.all_passed():
            failures.append(k)
        if args.json:
            print(json.dumps(rep.to_dict()), flush=True)
        else:
            status = "PASS" if rep.all_passed() else "FAIL"
            passed = sum(r.passed for r in rep.identities)
            print(
                f"k={rep.k:2d}  weight={rep.weight}  N={rep.nonlinearity}"
                f"  predicted={rep.predicted}  oracle={rep.oracle}"
                f"  identities={passed}/{len(rep.identities)}  {status}",
                flush=True,
            )
    summary = {"k_min": 4, "k_max": args.max_k, "all_passed": not failures, "failed_k": failures}
    if args.json:
        print(json.dumps({"summary": summary}))
    else:
        print(f"verified k=4..{args.max_k}: {'all identities hold' if not failures else f'FAILURES at k={failures}'}")
    return 1 if failures else 0


def _cmd_bench(args: argparse.Namespace) -> int:
    if not 0 <= args.n <= max_vars():
        raise ValueError(f"variable count {args.n} outside 0..{max_vars()}")
    if args.reps < 1:
        raise ValueError("--reps must be positive")
    rng = np.random.default_rng(args.seed)
    times = []
    for _ in range(args.reps):
        t = random_table(args.n, rng)
        start = time.perf_counter()
        walsh_transform(t)
        times.append(time.perf_counter() - start)
    print(
        json.dumps(
            {
                "n": args.n,
                "reps": args.reps,
                "median_seconds": statistics.median(times),
                "min_seconds": min(times),
                "max_seconds": max(times),
            }
        )
    )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boolfn",
        description="Exact spectral analysis of Boolean functions and the majority family.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="weight, nonlinearity, degree, ANF of a table")
    p.add_argument("--tt", required=True, help="truth table, '0'/'1' text or '0x...' hex")
    p.add_argument("--format", choices=("auto", "binary", "hex"), default="auto")
    p.add_argument("--n", type=int, default=None, help="expected variable count (checked)")
    p.add_argument("--text", action="store_true", help="plain text instead of JSON")
    p.add_argument("--spectrum", action="store_true", help="include the full Walsh spectrum")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("majority", help="construct the k-variable majority table")
    p.add_argument("k", type=int)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--table", action="store_true", help="print the bitstring (default)")
    mode.add_argument("--report", action="store_true", help="measured vs predicted JSON report")
    mode.add_argument("--runlength", action="store_true", help="run-length display, k <= 9")
    p.set_defaults(func=_cmd_majority)

    p = sub.add_parser("verify", help="check every majority identity up to --max-k")
    p.add_argument("--max-k", type=int, required=True, dest="max_k")
    p.add_argument("--json", action="store_true", help="one JSON report per line")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bench", help="time the Walsh transform on random tables")
    p.add_argument("n", type=int)
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
