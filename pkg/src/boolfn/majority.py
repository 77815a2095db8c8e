"""The majority-vote family and its closed-form checks.

majority(k) outputs 1 exactly when the input weight reaches ceil(k/2).
The family obeys a chain of structural identities: the table on an odd
variable count is the reversed complement of the previous even table
glued in front of that same table, the right half mirrors the left
half, and both the weights of the pieces and the nonlinearity have
exact binomial closed forms.  verify_identities() rebuilds everything
from scratch and checks each identity bit-exactly or integer-exactly
against measured values.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import groupby

import numpy as np

from .spectral import brute_force_nonlinearity, walsh_transform
from .truthtable import TruthTable, concat, max_vars

VERIFY_MAX_K = 24  # spectrum-verified range; closed forms alone go to BINOMIAL_MAX
BINOMIAL_MAX = 64
_BRUTE_FORCE_MAX_K = 15
_BUILD_CHUNK = 1 << 20
_POPCOUNT8 = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)


def _popcounts(idx: np.ndarray) -> np.ndarray:
    pc = _POPCOUNT8[idx & 0xFF]
    for shift in (8, 16, 24):
        pc = pc + _POPCOUNT8[(idx >> shift) & 0xFF]
    return pc


def majority(k: int) -> TruthTable:
    """Truth table of the k-variable majority vote: 1 iff weight >= ceil(k/2)."""
    if not 1 <= k <= max_vars():
        raise ValueError(f"variable count {k} outside 1..{max_vars()}")
    threshold = (k + 1) // 2
    size = 1 << k
    packed = bytearray()
    for start in range(0, size, _BUILD_CHUNK):
        idx = np.arange(start, min(start + _BUILD_CHUNK, size), dtype=np.uint32)
        packed += np.packbits(_popcounts(idx) >= threshold, bitorder="little").tobytes()
    return TruthTable(k, int.from_bytes(packed, "little"))


def left_half(k: int) -> TruthTable:
    return majority(k).halves()[0]


def right_half(k: int) -> TruthTable:
    return majority(k).halves()[1]


def first_quarter(k: int) -> TruthTable:
    """First quarter of the majority table; defined for odd k >= 5."""
    if k % 2 == 0:
        raise ValueError("first quarter is defined for odd variable counts")
    if k < 5:
        raise ValueError("first quarter needs at least five variables")
    return left_half(k).halves()[0]


def binomial(a: int, b: int) -> int:
    """Exact C(a, b) by Pascal-row accumulation."""
    if not 0 <= b <= a <= BINOMIAL_MAX:
        raise ValueError(f"binomial arguments ({a}, {b}) outside 0 <= b <= a <= {BINOMIAL_MAX}")
    row = [1]
    for _ in range(a):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return row[b]


def predicted_nonlinearity(k: int) -> int:
    """Closed-form nonlinearity of majority(k):
    2**(2n) - C(2n, n) for k = 2n + 1, half that for k = 2n."""
    if k < 4:
        raise ValueError("closed-form nonlinearity starts at four variables")
    if k % 2:
        n = (k - 1) // 2
        return (1 << (2 * n)) - binomial(2 * n, n)
    n = k // 2
    half, rem = divmod(binomial(2 * n, n), 2)
    assert rem == 0  # central binomials are even for n >= 1
    return (1 << (2 * n - 1)) - half


def predicted_left_half_weight(n: int) -> int:
    """Weight of the left half of majority(2n + 1): 2**(2n-1) - C(2n, n)/2."""
    if n < 2:
        raise ValueError("left-half weight formula needs n >= 2")
    half, rem = divmod(binomial(2 * n, n), 2)
    assert rem == 0
    return (1 << (2 * n - 1)) - half


def _right_half_nonlinearity_forms(n: int) -> tuple[int, int]:
    """The two equivalent binomial forms for the right half of majority(2n)."""
    tail = sum(binomial(2 * n - 2, j) for j in range(n + 1, 2 * n - 1))
    first = 2 * tail + binomial(2 * n - 2, n)
    central_half, rem = divmod(binomial(2 * n - 2, n - 1), 2)
    assert rem == 0
    second = tail + (1 << (2 * n - 3)) - central_half
    return first, second


def predicted_right_half_nonlinearity(n: int) -> int:
    """Closed-form nonlinearity of the right half of majority(2n), n >= 3."""
    if n < 3:
        raise ValueError("right-half nonlinearity formula needs n >= 3")
    first, second = _right_half_nonlinearity_forms(n)
    if first != second:
        raise ArithmeticError(f"closed forms disagree at n={n}: {first} vs {second}")
    return first


def predicted_quarter_half_weights(n: int) -> tuple[int, int]:
    """Weights of the two halves of the first quarter of majority(2n + 1)."""
    if n < 3:
        raise ValueError("quarter-half weight formulas need n >= 3")
    left = sum(binomial(2 * n - 2, j) for j in range(n + 1, 2 * n - 1))
    right = sum(binomial(2 * n - 2, j) for j in range(n, 2 * n - 1))
    return left, right


def run_length_string(t: TruthTable) -> str:
    """Run-length text like '0_7 1 0_3 1 0 1_3' for compact table display."""
    parts = []
    for ch, run in groupby(t.to_bitstring()):
        m = len(list(run))
        parts.append(ch if m == 1 else f"{ch}_{m}")
    return " ".join(parts)


@dataclass(frozen=True)
class IdentityResult:
    name: str
    passed: bool


@dataclass(frozen=True)
class MajorityReport:
    """Measured quantities and identity outcomes for one variable count."""

    k: int
    weight: int
    nonlinearity: int
    predicted: int
    identities: tuple[IdentityResult, ...]
    oracle: str

    def all_passed(self) -> bool:
        return all(r.passed for r in self.identities)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "weight": self.weight,
            "nonlinearity": self.nonlinearity,
            "predicted": self.predicted,
            "identities": [{"name": r.name, "pass": r.passed} for r in self.identities],
            "oracle": self.oracle,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def majority_report(k: int) -> MajorityReport:
    """Construct majority(k), measure it, and check every applicable identity."""
    if not 4 <= k <= VERIFY_MAX_K:
        raise ValueError(f"report range is 4..{VERIFY_MAX_K}, got {k}")

    m = majority(k)
    a, b = m.halves()
    weight = m.weight()
    measured = walsh_transform(m).nonlinearity()
    predicted = predicted_nonlinearity(k)

    checks: list[IdentityResult] = []

    def add(name: str, ok: bool) -> None:
        checks.append(IdentityResult(name, bool(ok)))

    closed_form_ok = measured == predicted
    oracle = "spectrum"
    if k <= _BRUTE_FORCE_MAX_K:
        oracle = "both"
        closed_form_ok = closed_form_ok and brute_force_nonlinearity(m) == predicted
    add("nonlinearity_closed_form", closed_form_ok)

    if k % 2:
        n = (k - 1) // 2
        prev = majority(k - 1)
        add("odd_from_even_decomposition", m == concat(prev.complement().reverse(), prev))
        add("right_half_is_reversed_complement", b == a.complement().reverse())
        add("odd_majority_balanced", weight == 1 << (2 * n))
        add("left_half_weight_formula", a.weight() == predicted_left_half_weight(n))

        nl_left = walsh_transform(a).nonlinearity()
        add("mirror_extension_doubles_nonlinearity", measured == 2 * nl_left)

        nl_prev = walsh_transform(prev).nonlinearity()
        add(
            "left_half_weight_equals_nonlinearity",
            nl_left == nl_prev and nl_left == a.weight(),
        )

        if k >= 7:
            q1 = first_quarter(k)
            prev_right = prev.halves()[1]
            add("first_quarter_is_reversed_complement", q1 == prev_right.complement().reverse())
            q1a, q1b = q1.halves()
            wl, wr = predicted_quarter_half_weights(n)
            add("quarter_half_weight_formulas", q1a.weight() == wl and q1b.weight() == wr)
    else:
        n = k // 2
        if n >= 3:
            mirrored = b.complement().reverse()
            add("mirrored_right_half_weight_bound", mirrored.weight() < (1 << (2 * n - 2)))

            first, second = _right_half_nonlinearity_forms(n)
            add("right_half_closed_forms_agree", first == second)

            nl_right = walsh_transform(b).nonlinearity()
            right_ok = nl_right == first and mirrored.weight() == first
            if k - 1 <= _BRUTE_FORCE_MAX_K:
                right_ok = right_ok and brute_force_nonlinearity(b) == first
            add("right_half_nonlinearity_formula", right_ok)

    return MajorityReport(k, weight, measured, predicted, tuple(checks), oracle)


def verify_identities(k_max: int) -> list[MajorityReport]:
    """Reports for every k in 4..k_max; a failed identity never raises,
    it is recorded in the report."""
    if not 4 <= k_max <= VERIFY_MAX_K:
        raise ValueError(f"verification range is 4..{VERIFY_MAX_K}, got {k_max}")
    return [majority_report(k) for k in range(4, k_max + 1)]
