"""Symmetric binary matrices as tuples of row bitmasks, with GF(2) rank."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

MAX_EXHAUSTIVE_DIM = 6  # 2^{m(m+1)/2} symmetric matrices; full scans stop here


def gf2_rank(rows) -> int:
    """Rank over GF(2) of a matrix given as an iterable of row bitmasks."""
    pivots = {}
    rank = 0
    for row in rows:
        cur = row
        while cur:
            hb = cur.bit_length() - 1
            if hb in pivots:
                cur ^= pivots[hb]
            else:
                pivots[hb] = cur
                rank += 1
                break
    return rank


def gf2_is_nonsingular(rows) -> bool:
    """Full-rank test; same elimination as gf2_rank with early exit."""
    pivots = {}
    for row in rows:
        cur = row
        while cur:
            hb = cur.bit_length() - 1
            if hb in pivots:
                cur ^= pivots[hb]
            else:
                pivots[hb] = cur
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class SymMatrix:
    """An m x m symmetric matrix over GF(2); row j is the bitmask rows[j]."""

    m: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.m:
            raise ValueError(f"expected {self.m} rows, got {len(self.rows)}")
        for j, row in enumerate(self.rows):
            if row >> self.m:
                raise ValueError(f"row {j} has bits beyond column {self.m - 1}")
        for j in range(self.m):
            for k in range(j):
                if (self.rows[j] >> k & 1) != (self.rows[k] >> j & 1):
                    raise ValueError(f"entries ({j},{k}) and ({k},{j}) differ")

    def __getitem__(self, jk: tuple[int, int]) -> int:
        j, k = jk
        return self.rows[j] >> k & 1

    def rank(self) -> int:
        return gf2_rank(self.rows)

    def kernel_dim(self) -> int:
        return self.m - self.rank()

    def is_nonsingular(self) -> bool:
        return gf2_is_nonsingular(self.rows)

    def __xor__(self, other: "SymMatrix") -> "SymMatrix":
        if self.m != other.m:
            raise ValueError("dimension mismatch")
        return SymMatrix(self.m, tuple(a ^ b for a, b in zip(self.rows, other.rows)))

    def apply_left(self, z: int) -> int:
        """z B as a bitmask: component k is parity of z . column_k (= row_k)."""
        out = 0
        for k in range(self.m):
            if (z & self.rows[k]).bit_count() & 1:
                out |= 1 << k
        return out

    def to_array(self) -> np.ndarray:
        return np.array(
            [[self.rows[j] >> k & 1 for k in range(self.m)] for j in range(self.m)],
            dtype=np.uint8,
        )

    # ---- upper-triangle packing (row-major, earlier positions more significant)

    def upper_key(self) -> int:
        """Pack the upper triangle (0,0),(0,1),...,(m-1,m-1) row-major.

        Position (0,0) is the most significant bit, so ascending keys order
        matrices lexicographically by row-major upper triangle.
        """
        key = 0
        for j in range(self.m):
            for k in range(j, self.m):
                key = (key << 1) | (self.rows[j] >> k & 1)
        return key

    @classmethod
    def from_upper_key(cls, m: int, key: int) -> "SymMatrix":
        rows = [0] * m
        pos = m * (m + 1) // 2
        for j in range(m):
            for k in range(j, m):
                pos -= 1
                if key >> pos & 1:
                    rows[j] |= 1 << k
                    rows[k] |= 1 << j
        return cls(m, tuple(rows))

    @classmethod
    def identity(cls, m: int) -> "SymMatrix":
        return cls(m, tuple(1 << j for j in range(m)))

    @classmethod
    def zero(cls, m: int) -> "SymMatrix":
        return cls(m, (0,) * m)

    # ---- serialization: m lines of m bits, row-major

    def to_text(self) -> str:
        return "\n".join(
            "".join(str(self.rows[j] >> k & 1) for k in range(self.m)) for j in range(self.m)
        )

    @classmethod
    def from_text(cls, text: str) -> "SymMatrix":
        lines = [ln.strip() for ln in text.strip().splitlines()]
        m = len(lines)
        rows = []
        for ln in lines:
            if len(ln) != m or set(ln) - {"0", "1"}:
                raise ValueError(f"bad matrix line {ln!r}")
            rows.append(sum(1 << k for k, ch in enumerate(ln) if ch == "1"))
        return cls(m, tuple(rows))


def _upper_basis_rows(m: int) -> list[tuple[int, int]]:
    """Per upper-triangle position, the (row_j_delta, row_k_delta) it flips.

    Returned in the same row-major order as SymMatrix.upper_key, most
    significant position first.
    """
    deltas = []
    for j in range(m):
        for k in range(j, m):
            deltas.append((j, k))
    return deltas


@lru_cache(maxsize=None)
def nonsingular_symmetric_keys(m: int) -> np.ndarray:
    """Sorted upper-triangle keys of every nonsingular symmetric m x m matrix.

    Full scan of all 2^{m(m+1)/2} symmetric matrices via a Gray-code walk, so
    each step flips a single symmetric entry pair.  Cached per m; m is capped
    because the scan is exponential.
    """
    if not 1 <= m <= MAX_EXHAUSTIVE_DIM:
        raise ValueError(
            f"exhaustive symmetric scan supported for 1 <= m <= {MAX_EXHAUSTIVE_DIM}, got {m}"
        )
    nbits = m * (m + 1) // 2
    positions = _upper_basis_rows(m)
    rows = [0] * m
    found = []
    gray_prev = 0
    for i in range(1, 1 << nbits):
        gray = i ^ (i >> 1)
        changed = (gray ^ gray_prev).bit_length() - 1
        gray_prev = gray
        # bit b of the gray counter corresponds to upper position nbits-1-b
        j, k = positions[nbits - 1 - changed]
        rows[j] ^= 1 << k
        if j != k:
            rows[k] ^= 1 << j
        if gf2_is_nonsingular(rows):
            found.append(gray)
    keys = np.array(sorted(found), dtype=np.int64)
    keys.setflags(write=False)
    return keys


def count_nonsingular_symmetric(m: int, method: str = "enumerate") -> int:
    """Number of nonsingular symmetric m x m matrices over GF(2).

    method="enumerate" scans all symmetric matrices (m <= 6); "formula" uses
    the known product expression and works for any m >= 1.
    """
    if method == "formula":
        return nonsingular_symmetric_count_formula(m)
    if method != "enumerate":
        raise ValueError(f"unknown method {method!r}")
    return int(nonsingular_symmetric_keys(m).size)


def nonsingular_symmetric_count_formula(m: int) -> int:
    if m < 1:
        raise ValueError("m must be >= 1")
    if m % 2 == 0:
        out = 1
        for j in range(1, m // 2 + 1):
            out *= (1 << (m + 1)) - (1 << (2 * j))
        return out
    out = 1
    for j in range((m - 1) // 2 + 1):
        out *= (1 << m) - (1 << (2 * j))
    return out
