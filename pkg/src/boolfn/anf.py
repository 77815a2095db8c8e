"""Algebraic normal form via the binary Moebius transform.

Coefficient index m encodes the monomial that multiplies the variables
whose index bits are set in m (same bit convention as truth tables, so
bit p stands for x_{n-p}).  The transform is an XOR butterfly done
directly on the packed bits, and it is its own inverse.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .truthtable import TruthTable

_DEGREE_NUMPY_MIN_N = 14
_POPCOUNT8 = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)


def _mobius(bits: int, n: int) -> int:
    """Packed XOR butterfly; self-inverse subset-sum over GF(2)."""
    size = 1 << n
    full = (1 << size) - 1
    block = 1
    while block < size:
        low_mask = ((1 << block) - 1) * (full // ((1 << (2 * block)) - 1))
        bits ^= (bits & low_mask) << block
        block <<= 1
    return bits


@dataclass(frozen=True)
class AnfTable:
    """Packed Moebius coefficients; bit m is the coefficient of monomial m."""

    n: int
    coeffs: int

    @property
    def is_constant(self) -> bool:
        return self.coeffs in (0, 1)

    def to_truthtable(self) -> TruthTable:
        return TruthTable(self.n, _mobius(self.coeffs, self.n))

    def monomials(self) -> list[int]:
        """Set coefficient indices, ascending."""
        out = []
        m = self.coeffs
        while m:
            low = m & -m
            out.append(low.bit_length() - 1)
            m ^= low
        return out

    def degree(self) -> int:
        """Largest monomial size; 0 for the constants (see is_constant)."""
        if self.coeffs == 0:
            return 0
        if self.n < _DEGREE_NUMPY_MIN_N:
            best = 0
            m = self.coeffs
            while m:
                low = m & -m
                best = max(best, (low.bit_length() - 1).bit_count())
                if best == self.n:
                    break
                m ^= low
            return best
        raw = self.coeffs.to_bytes((1 << self.n) // 8, "little")
        flags = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
        idx = np.flatnonzero(flags).astype(np.uint32)
        pc = _POPCOUNT8[idx & 0xFF]
        for shift in (8, 16, 24):
            pc = pc + _POPCOUNT8[(idx >> shift) & 0xFF]
        return int(pc.max())

    def monomial_string(self, m: int) -> str:
        if m == 0:
            return "1"
        names = [f"x{self.n - p}" for p in range(m.bit_length() - 1, -1, -1) if (m >> p) & 1]
        return "".join(names)

    def render(self) -> str:
        """Sum of monomials, highest degree first, 'x1x2'-style variables."""
        if self.coeffs == 0:
            return "0"
        keyed = []
        for m in self.monomials():
            variables = tuple(self.n - p for p in range(m.bit_length() - 1, -1, -1) if (m >> p) & 1)
            keyed.append((-len(variables), variables, m))
        keyed.sort()
        return " + ".join(self.monomial_string(m) for _, _, m in keyed)


def to_anf(t: TruthTable) -> AnfTable:
    return AnfTable(t.n, _mobius(t.bits, t.n))


def degree(t: TruthTable) -> int:
    return to_anf(t).degree()


def is_affine(t: TruthTable) -> bool:
    return degree(t) <= 1
