"""Exact spectra, the multicode-CDMA signal model, and PAPR certification.

For a word c over Z_{2^h} of length n = 2^m, the Fourier transform is

    F(u) = sum_x omega^{c(x)} (-1)^{u . x},   omega = -1 (h=1) or i (h=2),

with x, u running over {0,1}^m under the least-significant-bit-first index
convention of boolfunc.  Everything is computed in Gaussian integers, so
statements like "PAPR equals 1" or "the spectrum has constant magnitude
2^{m/2}" are decided exactly, never within a floating-point tolerance.

The transmitted multicode-CDMA signal modulates row j of the canonical
Walsh-Hadamard matrix H_n (recursively H_n = [[H, H], [H, -H]]) with
omega^{c_j} and sums:  S_c(t) = sum_j omega^{c_j} (H_n)_{j,t}.  Since
(H_n)_{j,t} = (-1)^{j . t}, the signal equals the Fourier transform under the
bit identification t <-> (t_0, ..., t_{m-1}); `mc_cdma_signal` nevertheless
builds H_n explicitly and multiplies it out, giving an implementation
independent of the butterfly in `fourier` so the two routes can be checked
against each other.

PAPR(c) = max_t |S_c(t)|^2 / n is kept as the exact integer pair
(max |F(u)|^2, 2^m); it equals 1 precisely for bent words.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt

import numpy as np

from .boolfunc import Word, degrees_rows, split_values
from .gaussint import GaussInt

_RE_OF_SYMBOL = np.array([1, 0, -1, 0], dtype=np.int64)
_IM_OF_SYMBOL = np.array([0, 1, 0, -1], dtype=np.int64)


def fwht_rows(a: np.ndarray) -> np.ndarray:
    """In-place Walsh-Hadamard butterfly along the last axis; returns its input.

    Computes W[u] = sum_x (-1)^{popcount(u & x)} a[x] per row, in O(n log n)
    integer additions.  `a` must be a signed integer array.
    """
    n = a.shape[-1]
    if n & (n - 1):
        raise ValueError("length must be a power of two")
    view = a.reshape(-1, n)
    half = 1
    while half < n:
        v = view.reshape(-1, n // (2 * half), 2, half)
        x = v[:, :, 0, :].copy()
        v[:, :, 0, :] += v[:, :, 1, :]
        v[:, :, 1, :] = x - v[:, :, 1, :]
        half *= 2
    return a


def spectrum_rows(values: np.ndarray, h: int) -> tuple[np.ndarray, np.ndarray]:
    """(re, im) int64 spectra of a batch of value-word rows."""
    vals = np.atleast_2d(np.asarray(values, dtype=np.uint8))
    if h == 1:
        re = fwht_rows(_RE_OF_SYMBOL[vals * 2])  # maps 0 -> +1, 1 -> -1
        return re, np.zeros_like(re)
    if h == 2:
        return fwht_rows(_RE_OF_SYMBOL[vals]), fwht_rows(_IM_OF_SYMBOL[vals])
    raise ValueError(f"h must be 1 or 2, got {h}")


@dataclass(frozen=True)
class Spectrum:
    """Exact Fourier spectrum; entry u is re[u] + i*im[u]."""

    m: int
    re: np.ndarray
    im: np.ndarray

    @property
    def n(self) -> int:
        return 1 << self.m

    def __getitem__(self, u: int) -> GaussInt:
        return GaussInt(int(self.re[u]), int(self.im[u]))

    def __len__(self) -> int:
        return self.n

    def abs2(self) -> np.ndarray:
        return self.re * self.re + self.im * self.im

    def parseval_holds(self) -> bool:
        """sum_u |F(u)|^2 == 4^m, an identity for every word."""
        return int(self.abs2().sum()) == 1 << (2 * self.m)


@dataclass(frozen=True)
class PaprValue:
    """Exact peak-to-average power ratio max|F|^2 / 2^m as an integer pair."""

    numerator: int
    denominator: int

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def is_one(self) -> bool:
        return self.numerator == self.denominator

    def __le__(self, other) -> bool:
        return self.as_fraction() <= other

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


def fourier(w: Word) -> Spectrum:
    re, im = spectrum_rows(w.values, w.h)
    return Spectrum(w.m, re[0], im[0])


@lru_cache(maxsize=None)
def hadamard_matrix(n: int) -> np.ndarray:
    """The canonical Walsh-Hadamard matrix, built by its 2x2 block recursion."""
    if n & (n - 1) or n < 1:
        raise ValueError("order must be a power of two")
    if n == 1:
        h = np.array([[1]], dtype=np.int64)
    else:
        h = np.kron(np.array([[1, 1], [1, -1]], dtype=np.int64), hadamard_matrix(n // 2))
    h.setflags(write=False)
    return h


def mc_cdma_signal(w: Word) -> Spectrum:
    """S_c(t) = sum_j omega^{c_j} (H_n)_{j,t} for t = 0..n-1, exactly.

    Returned in the same container as `fourier`; by the bit identification of
    t the two agree entrywise, but this route goes through the explicit
    Hadamard matrix product.
    """
    re, im = signal_rows(w.values, w.h)
    return Spectrum(w.m, re[0], im[0])


def signal_rows(values: np.ndarray, h: int) -> tuple[np.ndarray, np.ndarray]:
    vals = np.atleast_2d(np.asarray(values, dtype=np.uint8))
    H = hadamard_matrix(vals.shape[-1])
    if h == 1:
        re = _RE_OF_SYMBOL[vals * 2] @ H
        return re, np.zeros_like(re)
    if h == 2:
        return _RE_OF_SYMBOL[vals] @ H, _IM_OF_SYMBOL[vals] @ H
    raise ValueError(f"h must be 1 or 2, got {h}")


def papr(w: Word) -> PaprValue:
    return PaprValue(int(fourier(w).abs2().max()), w.n)


def papr_rows(values: np.ndarray, h: int) -> np.ndarray:
    """max_u |F(u)|^2 for each row; divide by 2^m for the PAPR."""
    re, im = spectrum_rows(values, h)
    return (re * re + im * im).max(axis=1)


def is_bent(w: Word) -> bool:
    """True iff every spectral value has squared magnitude exactly 2^m."""
    return bool(np.all(fourier(w).abs2() == w.n))


def all_bent_rows(values: np.ndarray, h: int) -> np.ndarray:
    vals = np.atleast_2d(np.asarray(values, dtype=np.uint8))
    re, im = spectrum_rows(vals, h)
    return np.all(re * re + im * im == vals.shape[-1], axis=1)


class NotBentError(ValueError):
    pass


def spectrum_form_check(w: Word) -> bool:
    """Check the exact shape of a bent quaternary spectrum.

    For even m each value must be one of +-2^{m/2}, +-i 2^{m/2}; for odd m
    both parts must have magnitude 2^{(m-1)/2} (2^m is a sum of two squares
    in exactly one way).  Raises NotBentError when the word is not bent.
    """
    if w.h != 2:
        raise ValueError("the spectrum shape classification applies to quaternary words")
    if not is_bent(w):
        raise NotBentError("word is not bent; no spectrum shape to classify")
    sp = fourier(w)
    return _spectrum_form_rows_ok(sp.re[None, :], sp.im[None, :], w.m)[0]


def spectrum_form_rows(values: np.ndarray) -> np.ndarray:
    vals = np.atleast_2d(np.asarray(values, dtype=np.uint8))
    m = vals.shape[-1].bit_length() - 1
    re, im = spectrum_rows(vals, 2)
    bent = np.all(re * re + im * im == vals.shape[-1], axis=1)
    return bent & _spectrum_form_rows_ok(re, im, m)


def _spectrum_form_rows_ok(re: np.ndarray, im: np.ndarray, m: int) -> np.ndarray:
    if m % 2 == 0:
        mag = 1 << (m // 2)
        ok = ((np.abs(re) == mag) & (im == 0)) | ((re == 0) & (np.abs(im) == mag))
    else:
        mag = 1 << ((m - 1) // 2)
        ok = (np.abs(re) == mag) & (np.abs(im) == mag)
    return np.all(ok, axis=1)


def degree_bound_check(w: Word) -> bool:
    """Degrees of both 2-adic halves of a bent quaternary word are <= ceil(m/2).

    Defined for m > 2 only; the bound is necessary for bentness, not
    sufficient.
    """
    if w.h != 2:
        raise ValueError("the degree bound applies to quaternary words")
    if w.m <= 2:
        raise ValueError(f"the degree bound requires m > 2, got m={w.m}")
    if not is_bent(w):
        raise NotBentError("word is not bent; the degree bound does not apply")
    return bool(degree_split_bound_rows(w.values[None, :])[0])


def degree_split_bound_rows(values: np.ndarray) -> np.ndarray:
    vals = np.atleast_2d(np.asarray(values, dtype=np.uint8))
    m = vals.shape[-1].bit_length() - 1
    bound = (m + 1) // 2
    low, high = split_values(vals)
    return (degrees_rows(low, 1) <= bound) & (degrees_rows(high, 1) <= bound)


def max_papr_rows(values: np.ndarray, h: int, chunk: int = 1 << 16) -> tuple[PaprValue, int]:
    """Exact max PAPR over a batch of rows with the index of a peak word."""
    vals = np.atleast_2d(np.asarray(values, dtype=np.uint8))
    n = vals.shape[-1]
    best = -1
    best_idx = -1
    for start in range(0, vals.shape[0], chunk):
        peaks = papr_rows(vals[start : start + chunk], h)
        i = int(peaks.argmax())
        if int(peaks[i]) > best:
            best = int(peaks[i])
            best_idx = start + i
    return PaprValue(best, n), best_idx


def square_root_exact(v: int) -> int | None:
    r = isqrt(v)
    return r if r * r == v else None
