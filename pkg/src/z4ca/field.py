"""Exact arithmetic in GF(2^m) with polynomial-basis bit-vector elements.

An element is an int in [0, 2^m): bit j is the coordinate of alpha^j in the
polynomial basis {1, alpha, ..., alpha^{m-1}}, where alpha is a root of the
defining modulus.  Addition is XOR; multiplication is carry-less polynomial
multiplication reduced modulo the modulus.

On top of the field this module provides:

- the absolute trace  tr(x) = x + x^2 + x^4 + ... + x^{2^{m-1}}  (valued in
  {0,1}), computed through a precomputed linear mask;
- linearized polynomials of the symmetric shape
      L(x) = a_0 x  +  sum_{j=1}^{t} ( a_j x^{2^j} + a_j^{2^{m-j}} x^{2^{m-j}} ),
  restricted to 0 <= t < m/2 so that L has at most 2^{2t} roots;
- the m x m symmetric GF(2) matrix of the bilinear form (x, y) -> tr(y L(x))
  relative to the polynomial basis.

The default modulus per degree is pinned in DEFAULT_MODULI so that every
derived object (matrices, coset representatives, codebooks) is reproducible
bit for bit.  Any other irreducible modulus of the right degree is accepted.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

# One irreducible (in fact primitive) polynomial per degree, as a bitmask with
# bit j = coefficient of x^j.  These are the common low-weight LFSR taps.
DEFAULT_MODULI = {
    1: 0x3,        # x + 1
    2: 0x7,        # x^2 + x + 1
    3: 0xB,        # x^3 + x + 1
    4: 0x13,       # x^4 + x + 1
    5: 0x25,       # x^5 + x^2 + 1
    6: 0x43,       # x^6 + x + 1
    7: 0x89,       # x^7 + x^3 + 1
    8: 0x11D,      # x^8 + x^4 + x^3 + x^2 + 1
    9: 0x211,      # x^9 + x^4 + 1
    10: 0x409,     # x^10 + x^3 + 1
    11: 0x805,     # x^11 + x^2 + 1
    12: 0x1053,    # x^12 + x^6 + x^4 + x + 1
    13: 0x201B,    # x^13 + x^4 + x^3 + x + 1
    14: 0x4443,    # x^14 + x^10 + x^6 + x + 1
    15: 0x8003,    # x^15 + x + 1
    16: 0x1100B,   # x^16 + x^12 + x^3 + x + 1
}

MAX_DEGREE = 16


def _poly_degree(p: int) -> int:
    return p.bit_length() - 1


def _poly_mulmod(a: int, b: int, modulus: int) -> int:
    """Carry-less multiply a*b in GF(2)[x], reduced modulo `modulus`."""
    deg = _poly_degree(modulus)
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> deg & 1:
            a ^= modulus
    return r


def _poly_gcd(a: int, b: int) -> int:
    while b:
        da, db = _poly_degree(a), _poly_degree(b)
        if da < db:
            a, b = b, a
            da, db = db, da
        if not b:
            break
        while da >= db and a:
            a ^= b << (da - db)
            da = _poly_degree(a)
        a, b = b, a
    return a


def is_irreducible(p: int) -> bool:
    """Irreducibility of a binary polynomial p of degree >= 1.

    p is reducible iff it shares a factor with x^{2^d} - x for some d <= deg/2,
    i.e. gcd(x^{2^d} + x mod p, p) != 1 for some 1 <= d <= deg(p)/2.
    """
    deg = _poly_degree(p)
    if deg < 1:
        return False
    if deg == 1:
        return True
    if p & 1 == 0:  # divisible by x
        return False
    x = 2
    xq = x
    for _ in range(deg // 2):
        xq = _poly_mulmod(xq, xq, p)  # xq = x^{2^d} mod p
        if _poly_gcd(xq ^ x, p) != 1:
            return False
    return True


class GF2m:
    """The field GF(2^m) in the polynomial basis of a chosen modulus."""

    def __init__(self, m: int, modulus: int | None = None):
        if not 1 <= m <= MAX_DEGREE:
            raise ValueError(f"degree m must be in [1, {MAX_DEGREE}], got {m}")
        if modulus is None:
            modulus = DEFAULT_MODULI[m]
        if _poly_degree(modulus) != m:
            raise ValueError(
                f"modulus 0x{modulus:x} has degree {_poly_degree(modulus)}, expected {m}"
            )
        if not is_irreducible(modulus):
            raise ValueError(f"modulus 0x{modulus:x} is reducible over GF(2)")
        self.m = m
        self.order = 1 << m
        self.modulus = modulus
        # tr is GF(2)-linear, so tr(x) = parity(popcount(x & mask)) where
        # bit j of mask is tr(alpha^j).
        self._trace_mask = 0
        for j in range(m):
            if self._trace_by_squaring(1 << j):
                self._trace_mask |= 1 << j

    # ---- element arithmetic ------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        return _poly_mulmod(a, b, self.modulus)

    def square(self, a: int) -> int:
        return _poly_mulmod(a, a, self.modulus)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a = self.inv(a)
            e = -e
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.square(a)
            e >>= 1
        return r

    def frob(self, a: int, k: int = 1) -> int:
        """a^{2^k} via k squarings (k taken modulo m)."""
        for _ in range(k % self.m):
            a = self.square(a)
        return a

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(a, self.order - 2)

    def elements(self) -> Iterator[int]:
        return iter(range(self.order))

    # ---- trace -------------------------------------------------------------

    def _trace_by_squaring(self, x: int) -> int:
        acc = x
        y = x
        for _ in range(self.m - 1):
            y = self.square(y)
            acc ^= y
        if acc not in (0, 1):
            raise AssertionError("trace left the prime subfield; modulus invalid?")
        return acc

    def trace(self, x: int) -> int:
        """Absolute trace tr(x) in {0, 1}."""
        return (x & self._trace_mask).bit_count() & 1

    # ---- serialization -----------------------------------------------------

    def describe(self) -> str:
        return f"m:{self.m} modulus:0x{self.modulus:x}"

    @classmethod
    def from_description(cls, text: str) -> "GF2m":
        parts = dict(tok.split(":", 1) for tok in text.split())
        return cls(int(parts["m"]), int(parts["modulus"], 16))

    def __repr__(self) -> str:
        return f"GF2m({self.describe()})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GF2m) and (self.m, self.modulus) == (other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.m, self.modulus))


@lru_cache(maxsize=32)
def default_field(m: int) -> GF2m:
    """The field with the pinned default modulus for degree m (cached)."""
    return GF2m(m)


@dataclass(frozen=True)
class LinearizedPoly:
    """L(x) = a_0 x + sum_{j=1..t} (a_j x^{2^j} + a_j^{2^{m-j}} x^{2^{m-j}}).

    The coefficient tuple is (a_0, ..., a_t) with each a_j a field element.
    Requires 0 <= t < m/2; then L, composed with the Frobenius automorphism
    x -> x^{2^t}, is an ordinary polynomial of degree <= 2^{2t}, so L has at
    most 2^{2t} roots and the associated bilinear form has rank >= m - 2t.
    """

    field: GF2m
    coeffs: tuple[int, ...]

    def __post_init__(self):
        t = len(self.coeffs) - 1
        if t < 0:
            raise ValueError("need at least the coefficient a_0")
        if not t < self.field.m / 2:
            raise ValueError(f"t={t} must satisfy t < m/2 = {self.field.m / 2}")
        for a in self.coeffs:
            if not 0 <= a < self.field.order:
                raise ValueError(f"coefficient {a} outside the field")

    @property
    def t(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: int) -> int:
        F = self.field
        m = F.m
        acc = F.mul(self.coeffs[0], x)
        for j in range(1, self.t + 1):
            aj = self.coeffs[j]
            acc ^= F.mul(aj, F.frob(x, j))
            acc ^= F.mul(F.frob(aj, m - j), F.frob(x, m - j))
        return acc

    def roots(self) -> list[int]:
        return [x for x in self.field.elements() if self(x) == 0]


def trace_form_rows(L: LinearizedPoly) -> tuple[int, ...]:
    """Matrix of the symmetric bilinear form (x, y) -> tr(y L(x)).

    Entry (j, k) is tr(basis_k * L(basis_j)) relative to the polynomial basis;
    row j is returned as a bitmask with bit k = entry (j, k).  The result is
    checked for symmetry, which holds because the two halves of each
    coefficient pair are Frobenius-conjugate.
    """
    F = L.field
    m = F.m
    images = [L(1 << j) for j in range(m)]
    rows = []
    for j in range(m):
        row = 0
        for k in range(m):
            if F.trace(F.mul(1 << k, images[j])):
                row |= 1 << k
        rows.append(row)
    for j in range(m):
        for k in range(j):
            if (rows[j] >> k & 1) != (rows[k] >> j & 1):
                raise AssertionError("trace bilinear form produced an asymmetric matrix")
    return tuple(rows)


def trace_form_basis_rows(field: GF2m, t: int) -> list[tuple[int, ...]]:
    """Matrices of tr(y L(x)) for the GF(2)-basis of the coefficient space.

    The map (a_0, ..., a_t) -> matrix is GF(2)-linear in the bits of the
    coefficients, so the matrix of an arbitrary tuple is the XOR of the
    returned basis matrices selected by the m*(t+1) coefficient bits.  Bit b
    of coefficient slot j corresponds to basis index j*m + b.
    """
    out = []
    for j in range(t + 1):
        for b in range(field.m):
            coeffs = [0] * (t + 1)
            coeffs[j] = 1 << b
            out.append(trace_form_rows(LinearizedPoly(field, tuple(coeffs))))
    return out


def linpoly_from_bits(field: GF2m, t: int, bits: int) -> LinearizedPoly:
    """Coefficient tuple from the packed bit index used by enumeration.

    Slot j of the tuple takes bits [j*m, (j+1)*m) of `bits`, matching the
    ordering of trace_form_basis_rows.
    """
    m = field.m
    coeffs = tuple((bits >> (j * m)) & (field.order - 1) for j in range(t + 1))
    return LinearizedPoly(field, coeffs)
