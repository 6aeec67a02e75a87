"""The Gray map and liftings from binary to quaternary bent words.

The Gray map sends a quaternary symbol z = a + 2b to the bit pair (b, a^b):

    0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10.

Extended symbolwise (pairs concatenated in index order) it is a bijection
from Z4^n onto {0,1}^{2n} that turns Lee distance into Hamming distance.
Reading the image of a length-2^m word as a Boolean function on m+1
variables puts the new variable y in the least-significant index position:
gray(f)(y, x) = a(x) y ^ b(x) when f(x) = a(x) + 2 b(x).

Three ways of combining binary bent functions into quaternary bent words are
provided, one per parity regime:

- lift_odd_offset: concatenates offset doublings (2a + eps, 2b + (1+eps))
  of two bent functions on m-1 variables (length doubles; the new variable
  is the most-significant index bit, unlike the Gray extension);
- lift_even: interleaves two bent functions on m variables into the word
  with values (a ^ b) + 2b (the Gray preimage of (x,y) -> a(x)y ^ b(x)(1^y));
- lift_gray_preimage: the Gray preimage of a single bent function on m+1
  variables.

`mm_binary_bent` generates binary bent functions on 2k variables from a
permutation and an arbitrary offset function on k variables; it feeds the
liftings so they are testable without external codebooks.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .boolfunc import GBF, Word


def gray(w: Word) -> Word:
    """Gray image; length doubles, Lee weight becomes Hamming weight."""
    if w.h != 2:
        raise ValueError("the Gray map applies to quaternary words")
    a = w.values & 1
    b = w.values >> 1
    out = np.empty(2 * w.n, dtype=np.uint8)
    out[0::2] = b
    out[1::2] = a ^ b
    return Word.binary(out)


def gray_inverse(g: Word) -> Word:
    """Inverse Gray map on a binary word of even (power-of-two) length."""
    if g.h != 1:
        raise ValueError("expected a binary word")
    if g.n < 2:
        raise ValueError("need length >= 2 to split into Gray pairs")
    b = g.values[0::2]
    ab = g.values[1::2]
    a = ab ^ b
    return Word.quaternary(a + 2 * b)


def lift_odd_offset(a: Word, b: Word, eps: int) -> Word:
    """(2a + eps | 2b + (1 + eps)) as one quaternary word of twice the length.

    When a and b are bent (their common variable count is m-1), the result is
    bent on m variables.  The new variable is the top index bit.
    """
    if a.h != 1 or b.h != 1:
        raise ValueError("inputs must be binary words")
    if a.n != b.n:
        raise ValueError(f"length mismatch: {a.n} vs {b.n}")
    if eps not in (0, 1):
        raise ValueError("offset bit must be 0 or 1")
    lo = (2 * a.values.astype(np.int16) + eps) % 4
    hi = (2 * b.values.astype(np.int16) + 1 + eps) % 4
    return Word.quaternary(np.concatenate([lo, hi]))


def lift_even(a: Word, b: Word) -> Word:
    """Quaternary word with values (a ^ b) + 2b; bent when a and b are bent."""
    if a.h != 1 or b.h != 1:
        raise ValueError("inputs must be binary words")
    if a.n != b.n:
        raise ValueError(f"length mismatch: {a.n} vs {b.n}")
    return Word.quaternary((a.values ^ b.values) + 2 * b.values)


def lift_gray_preimage(g: Word) -> Word:
    """Gray preimage; bent on m variables when g is bent on m+1 variables."""
    return gray_inverse(g)


def mm_binary_bent(k: int, sigma: Sequence[int], offset: Word | None = None) -> Word:
    """Word of g(x, y) = sigma(x) . y ^ offset(x) on 2k variables (x low bits).

    sigma must be a permutation of {0, ..., 2^k - 1}; the result is always
    binary bent.
    """
    size = 1 << k
    perm = np.asarray(sigma, dtype=np.int64)
    if perm.shape != (size,) or sorted(perm.tolist()) != list(range(size)):
        raise ValueError(f"sigma must be a permutation of range({size})")
    if offset is None:
        offset = Word.binary(np.zeros(size, dtype=np.uint8))
    if offset.h != 1 or offset.n != size:
        raise ValueError(f"offset must be a binary word of length {size}")
    ys = np.arange(size, dtype=np.int64)
    dots = np.bitwise_count(perm[:, None] & ys[None, :]) & 1  # dots[x, y]
    vals = (dots ^ offset.values[:, None].astype(np.uint8)).T.reshape(-1)
    return Word.binary(vals)


def all_bent_words_2vars() -> list[Word]:
    """The eight binary bent functions on two variables: x0 x1 plus affines."""
    out = []
    for c0 in (0, 1):
        for c1 in (0, 1):
            for c2 in (0, 1):
                anf = {0b11: 1, 0b01: c0, 0b10: c1, 0b00: c2}
                out.append(GBF(2, 1, anf).word())
    return out


def all_permutations(size: int):
    from itertools import permutations

    return permutations(range(size))
