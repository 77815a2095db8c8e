"""Packed truth-table representation for Boolean functions.

A function f on n variables is stored as the 2**n values f(v_0), ...,
f(v_{2**n - 1}) where v_i is the i-th input vector in lexicographic
order: v_0 is all zeros, v_1 = (0, ..., 0, 1), and so on as a binary
counter.  Index bit p (counted from the least significant end) carries
variable x_{n-p}: x_n ticks fastest, x_1 sits in the top bit.

Tables are packed into a single arbitrary-precision integer with table
entry i at bit position i, so weight and distance are popcounts and the
structural operations (complement, reversal, concatenation) are plain
integer arithmetic.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

_DEFAULT_MAX_VARS = 30
_MAX_VARS_ENV = "BOOLFN_MAX_N"

# per-byte bit reversal table, shared by reverse() and the hex codec
_BYTE_REVERSE = bytes(int(format(i, "08b")[::-1], 2) for i in range(256))


def max_vars() -> int:
    """Largest allowed variable count (default 30, override via BOOLFN_MAX_N)."""
    return int(os.environ.get(_MAX_VARS_ENV, _DEFAULT_MAX_VARS))


@dataclass(frozen=True)
class PointVector:
    """One input point (x_1, ..., x_n) of the function domain."""

    n: int
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coords) != self.n:
            raise ValueError(f"expected {self.n} coordinates, got {len(self.coords)}")
        if any(c not in (0, 1) for c in self.coords):
            raise ValueError("coordinates must be 0 or 1")

    @classmethod
    def from_index(cls, i: int, n: int) -> PointVector:
        if not 0 <= i < (1 << n):
            raise ValueError(f"index {i} outside 0..{(1 << n) - 1}")
        return cls(n, tuple((i >> (n - 1 - j)) & 1 for j in range(n)))

    def index(self) -> int:
        out = 0
        for c in self.coords:
            out = out << 1 | c
        return out

    def weight(self) -> int:
        return sum(self.coords)


@dataclass(frozen=True)
class TruthTable:
    """Boolean function given by its packed 2**n-entry truth table."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        cap = max_vars()
        if not 0 <= self.n <= cap:
            raise ValueError(f"variable count {self.n} outside 0..{cap}")
        if self.bits < 0 or self.bits.bit_length() > self.size:
            raise ValueError(f"packed value does not fit in {self.size} table bits")

    @property
    def size(self) -> int:
        return 1 << self.n

    def bit(self, i: int) -> int:
        if not 0 <= i < self.size:
            raise ValueError(f"table index {i} outside 0..{self.size - 1}")
        return (self.bits >> i) & 1

    def evaluate(self, point: PointVector) -> int:
        """Value at an input point; bit point.index() of the table."""
        if point.n != self.n:
            raise ValueError(f"point has {point.n} coordinates, table has {self.n}")
        return (self.bits >> point.index()) & 1

    def weight(self) -> int:
        return self.bits.bit_count()

    def is_balanced(self) -> bool:
        return 2 * self.weight() == self.size

    def distance(self, other: TruthTable) -> int:
        """Hamming distance: number of table positions where the two differ."""
        if other.n != self.n:
            raise ValueError(f"variable counts differ: {self.n} vs {other.n}")
        return (self.bits ^ other.bits).bit_count()

    def __xor__(self, other: TruthTable) -> TruthTable:
        if other.n != self.n:
            raise ValueError(f"variable counts differ: {self.n} vs {other.n}")
        return TruthTable(self.n, self.bits ^ other.bits)

    def complement(self) -> TruthTable:
        return TruthTable(self.n, self.bits ^ ((1 << self.size) - 1))

    def reverse(self) -> TruthTable:
        """Table read back-to-front: bit i becomes bit 2**n - 1 - i."""
        size = self.size
        if size < 8:
            rev = int(format(self.bits, f"0{size}b")[::-1], 2)
        else:
            raw = self.bits.to_bytes(size // 8, "little")
            rev = int.from_bytes(raw[::-1].translate(_BYTE_REVERSE), "little")
        return TruthTable(self.n, rev)

    def halves(self) -> tuple[TruthTable, TruthTable]:
        """Split into (left, right): entries 0..2**(n-1)-1 and the rest."""
        if self.n == 0:
            raise ValueError("cannot halve a table on zero variables")
        half = self.size // 2
        return (
            TruthTable(self.n - 1, self.bits & ((1 << half) - 1)),
            TruthTable(self.n - 1, self.bits >> half),
        )

    def to_bitstring(self) -> str:
        """'0'/'1' text, entry 0 first."""
        return format(self.bits, f"0{self.size}b")[::-1]

    def to_hex(self) -> str:
        """Hex text, 4 table bits per character, entry 0 in the top bit
        of the first character, '0x' prefix.  Needs a table of >= 4 bits."""
        size = self.size
        if size < 4:
            raise ValueError("hex format needs a table of at least 4 bits")
        if size == 4:
            return f"0x{int(self.to_bitstring(), 2):x}"
        raw = self.bits.to_bytes(size // 8, "little")
        return "0x" + raw.translate(_BYTE_REVERSE).hex()

    def to_array(self) -> np.ndarray:
        """Table entries as a uint8 array of 0/1, entry i at position i."""
        raw = self.bits.to_bytes((self.size + 7) // 8, "little")
        return np.unpackbits(
            np.frombuffer(raw, dtype=np.uint8), count=self.size, bitorder="little"
        )


def from_bitstring(s: str) -> TruthTable:
    """Parse '0'/'1' text, first character = table entry 0."""
    for pos, ch in enumerate(s):
        if ch not in "01":
            raise ValueError(f"invalid character {ch!r} at position {pos}")
    if len(s) == 0 or len(s) & (len(s) - 1):
        raise ValueError(f"table length {len(s)} is not a power of two")
    return TruthTable(len(s).bit_length() - 1, int(s[::-1], 2))


def from_hex(s: str) -> TruthTable:
    """Parse '0x...' hex text as written by TruthTable.to_hex."""
    if not s.startswith(("0x", "0X")):
        raise ValueError("hex table text must start with '0x'")
    digits = s[2:]
    for pos, ch in enumerate(digits):
        if ch not in "0123456789abcdefABCDEF":
            raise ValueError(f"invalid hex character {ch!r} at position {pos + 2}")
    if not digits:
        raise ValueError("hex table text has no digits")
    return from_bitstring("".join(format(int(ch, 16), "04b") for ch in digits))


def concat(left: TruthTable, right: TruthTable) -> TruthTable:
    """Join two tables on n variables into one on n + 1; left comes first."""
    if left.n != right.n:
        raise ValueError(f"variable counts differ: {left.n} vs {right.n}")
    return TruthTable(left.n + 1, left.bits | right.bits << left.size)


def point_weight(i: int, n: int) -> int:
    """Weight of the i-th input vector; the popcount of i."""
    if not 0 <= i < (1 << n):
        raise ValueError(f"index {i} outside 0..{(1 << n) - 1}")
    return i.bit_count()


def random_table(n: int, rng: np.random.Generator) -> TruthTable:
    """Uniformly random table on n variables."""
    size = 1 << n
    raw = rng.bytes((size + 7) // 8)
    return TruthTable(n, int.from_bytes(raw, "little") & ((1 << size) - 1))
