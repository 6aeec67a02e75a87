"""Generalized Boolean functions f: {0,1}^m -> Z_{2^h} for h in {1, 2}.

A function is handled in two interchangeable representations:

- its value word: the length-2^m vector (f(0), f(1), ..., f(2^m - 1)) where
  the argument bits are read off the index, least-significant bit first
  (index ell = sum ell_j 2^j evaluates f(ell_0, ..., ell_{m-1}));
- its algebraic normal form (ANF): the unique coefficients c_k in Z_{2^h}
  with  f(x) = sum_k c_k prod_j x_j^{k_j}  (k a monomial bitmask).

ANF -> word is the subset-sum (zeta) transform modulo 2^h; word -> ANF is its
Moebius inverse, one butterfly pass per variable.  Both are vectorized and
cost O(m 2^m).

Quaternary functions split 2-adically on values: f(x) = a(x) + 2 b(x) with
binary a, b.  The split is defined on value words (splitting ANF coefficients
instead would be a different and wrong operation).

Word files: a header line ``# m=<int> h=<int>`` followed by one word per
line, 2^m digits from {0,..,2^h-1} with no separators.
"""

from __future__ import annotations

import io
from typing import Iterable, Sequence

import numpy as np

MAX_VARS = 16


def _check_m(m: int):
    if not 0 <= m <= MAX_VARS:
        raise ValueError(f"number of variables must be in [0, {MAX_VARS}], got {m}")


def _check_h(h: int):
    if h not in (1, 2):
        raise ValueError(f"h must be 1 (binary) or 2 (quaternary), got h={h}")


class Word:
    """A length-2^m value word over Z_{2^h}; immutable after construction."""

    __slots__ = ("h", "values")

    def __init__(self, h: int, values):
        _check_h(h)
        vals = np.array(values, dtype=np.uint8, copy=True).ravel()
        n = vals.size
        if n == 0 or n & (n - 1):
            raise ValueError(f"word length must be a power of two, got {n}")
        if vals.size and int(vals.max()) >= (1 << h):
            raise ValueError(f"word symbols must lie in [0, {(1 << h) - 1}] for h={h}")
        _check_m(n.bit_length() - 1)
        vals.setflags(write=False)
        self.h = h
        self.values = vals

    @classmethod
    def binary(cls, values) -> "Word":
        return cls(1, values)

    @classmethod
    def quaternary(cls, values) -> "Word":
        return cls(2, values)

    @property
    def n(self) -> int:
        return self.values.size

    @property
    def m(self) -> int:
        return self.n.bit_length() - 1

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> int:
        return int(self.values[i])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Word)
            and self.h == other.h
            and np.array_equal(self.values, other.values)
        )

    def __hash__(self) -> int:
        return hash((self.h, self.values.tobytes()))

    def __add__(self, other: "Word") -> "Word":
        self._check_compatible(other)
        return Word(self.h, (self.values + other.values) % (1 << self.h))

    def __sub__(self, other: "Word") -> "Word":
        self._check_compatible(other)
        return Word(self.h, (self.values - other.values) % (1 << self.h))

    def _check_compatible(self, other: "Word"):
        if not isinstance(other, Word):
            raise TypeError("expected a Word")
        if self.h != other.h or self.n != other.n:
            raise ValueError("words differ in alphabet or length")

    def lee_weight(self) -> int:
        if self.h != 2:
            raise ValueError("Lee weight is defined on quaternary words")
        return int(LEE_WEIGHT[self.values].sum())

    def hamming_weight(self) -> int:
        return int(np.count_nonzero(self.values))

    def to_line(self) -> str:
        return "".join("0123"[v] for v in self.values)

    def __repr__(self) -> str:
        body = self.to_line() if self.n <= 32 else self.to_line()[:32] + "..."
        return f"Word(h={self.h}, {body})"


LEE_WEIGHT = np.array([0, 1, 2, 1], dtype=np.uint8)


def lee_distance(u: Word, v: Word) -> int:
    return (u - v).lee_weight()


def hamming_distance(u: Word, v: Word) -> int:
    return int(np.count_nonzero(u.values != v.values))


# ---------------------------------------------------------------------------
# ANF <-> value word
# ---------------------------------------------------------------------------


def zeta_rows(coeffs: np.ndarray, h: int) -> np.ndarray:
    """Subset-sum transform mod 2^h along the last axis: ANF -> values."""
    a = np.array(coeffs, dtype=np.uint8, copy=True)
    n = a.shape[-1]
    a = a.reshape(-1, n)
    mask = (1 << h) - 1
    half = 1
    while half < n:
        a = a.reshape(-1, n // (2 * half), 2, half)
        a[:, :, 1, :] += a[:, :, 0, :]
        a[:, :, 1, :] &= mask
        a = a.reshape(-1, n)
        half *= 2
    return a


def moebius_rows(values: np.ndarray, h: int) -> np.ndarray:
    """Inverse of zeta_rows: values -> ANF coefficients, mod 2^h."""
    a = np.array(values, dtype=np.uint8, copy=True)
    n = a.shape[-1]
    a = a.reshape(-1, n)
    mask = (1 << h) - 1
    half = 1
    while half < n:
        a = a.reshape(-1, n // (2 * half), 2, half)
        a[:, :, 1, :] -= a[:, :, 0, :]
        a[:, :, 1, :] &= mask
        a = a.reshape(-1, n)
        half *= 2
    return a


class GBF:
    """A generalized Boolean function held as its sparse ANF.

    anf maps monomial bitmasks k to nonzero coefficients c_k in Z_{2^h}.
    """

    __slots__ = ("m", "h", "anf")

    def __init__(self, m: int, h: int, anf: dict[int, int] | None = None):
        _check_m(m)
        _check_h(h)
        clean: dict[int, int] = {}
        for k, c in (anf or {}).items():
            if not 0 <= k < (1 << m):
                raise ValueError(f"monomial mask {k} out of range for m={m}")
            c %= 1 << h
            if c:
                clean[int(k)] = int(c)
        self.m = m
        self.h = h
        self.anf = clean

    def degree(self) -> int:
        """Max Hamming weight of a monomial with nonzero coefficient; 0 if none."""
        return max((k.bit_count() for k in self.anf), default=0)

    def coeff_vector(self) -> np.ndarray:
        v = np.zeros(1 << self.m, dtype=np.uint8)
        for k, c in self.anf.items():
            v[k] = c
        return v

    def word(self) -> Word:
        return Word(self.h, zeta_rows(self.coeff_vector(), self.h)[0])

    @classmethod
    def from_word(cls, w: Word) -> "GBF":
        coeffs = moebius_rows(w.values, w.h)[0]
        anf = {int(k): int(c) for k, c in enumerate(coeffs) if c}
        return cls(w.m, w.h, anf)

    def split(self) -> tuple["GBF", "GBF"]:
        """2-adic split of a quaternary function: value words a + 2b, binary a, b."""
        if self.h != 2:
            raise ValueError("2-adic split applies to quaternary functions (h=2)")
        values = self.word().values
        a = GBF.from_word(Word.binary(values & 1))
        b = GBF.from_word(Word.binary(values >> 1))
        return a, b

    def __add__(self, other: "GBF") -> "GBF":
        if (self.m, self.h) != (other.m, other.h):
            raise ValueError("mismatched functions")
        out = dict(self.anf)
        for k, c in other.anf.items():
            out[k] = (out.get(k, 0) + c) % (1 << self.h)
        return GBF(self.m, self.h, out)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GBF)
            and (self.m, self.h) == (other.m, other.h)
            and self.anf == other.anf
        )

    def __hash__(self) -> int:
        return hash((self.m, self.h, tuple(sorted(self.anf.items()))))

    # ---- text form: `mask:coeff` pairs, ascending mask ----------------------

    def to_text(self) -> str:
        return " ".join(f"{k}:{c}" for k, c in sorted(self.anf.items()))

    @classmethod
    def from_text(cls, m: int, h: int, text: str) -> "GBF":
        anf = {}
        for tok in text.split():
            k, c = tok.split(":")
            anf[int(k)] = int(c)
        return cls(m, h, anf)

    def __repr__(self) -> str:
        return f"GBF(m={self.m}, h={self.h}, {self.to_text() or '0'})"


def anf_to_word(f: GBF) -> Word:
    return f.word()


def word_to_anf(w: Word) -> GBF:
    return GBF.from_word(w)


def two_adic_split(f: GBF) -> tuple[GBF, GBF]:
    return f.split()


def split_values(values: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Value-level 2-adic split of quaternary rows: (low bit, high bit)."""
    v = np.asarray(values, dtype=np.uint8)
    return v & 1, v >> 1


def monomial_word(m: int, mask: int, h: int = 2) -> Word:
    """Value word of the monomial prod_{j in mask} x_j."""
    idx = np.arange(1 << m, dtype=np.uint32)
    return Word(h, ((idx & np.uint32(mask)) == np.uint32(mask)).astype(np.uint8))


def degrees_rows(values: np.ndarray, h: int) -> np.ndarray:
    """ANF degree of each row of a batch of value words."""
    vals = np.atleast_2d(np.asarray(values, dtype=np.uint8))
    coeffs = moebius_rows(vals, h)
    n = vals.shape[-1]
    wt = np.array([k.bit_count() for k in range(n)], dtype=np.int64)
    masked = np.where(coeffs != 0, wt[None, :], -1)
    deg = masked.max(axis=1)
    return np.maximum(deg, 0)


# ---------------------------------------------------------------------------
# word files
# ---------------------------------------------------------------------------


def write_words(stream_or_path, words: Iterable[Word] | Sequence[Word]):
    words = list(words)
    if not words:
        raise ValueError("refusing to write an empty word file")
    m, h = words[0].m, words[0].h
    for w in words:
        if (w.m, w.h) != (m, h):
            raise ValueError("all words in a file must share m and h")
    own = isinstance(stream_or_path, (str, bytes)) or hasattr(stream_or_path, "__fspath__")
    stream = open(stream_or_path, "w") if own else stream_or_path
    try:
        stream.write(f"# m={m} h={h}\n")
        for w in words:
            stream.write(w.to_line() + "\n")
    finally:
        if own:
            stream.close()


class WordFileError(ValueError):
    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        super().__init__(message if line_no is None else f"line {line_no}: {message}")


def read_words(stream_or_path) -> list[Word]:
    own = isinstance(stream_or_path, (str, bytes)) or hasattr(stream_or_path, "__fspath__")
    stream = open(stream_or_path, "r") if own else stream_or_path
    try:
        header = stream.readline()
        if not header.startswith("#"):
            raise WordFileError("missing `# m=<int> h=<int>` header", 1)
        try:
            fields = dict(tok.split("=") for tok in header[1:].split())
            m, h = int(fields["m"]), int(fields["h"])
        except (ValueError, KeyError) as exc:
            raise WordFileError(f"bad header {header.strip()!r}", 1) from exc
        _check_m(m)
        _check_h(h)
        n = 1 << m
        words = []
        for line_no, line in enumerate(stream, start=2):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if len(line) != n:
                raise WordFileError(f"expected {n} symbols, got {len(line)}", line_no)
            try:
                vals = np.frombuffer(line.encode("ascii"), dtype=np.uint8) - ord("0")
            except UnicodeEncodeError as exc:
                raise WordFileError("non-ascii symbol", line_no) from exc
            if int(vals.max()) >= (1 << h):
                raise WordFileError(f"symbol out of range for h={h}", line_no)
            words.append(Word(h, vals))
        if not words:
            raise WordFileError("file contains no words")
        return words
    finally:
        if own:
            stream.close()


def words_to_matrix(words: Sequence[Word]) -> np.ndarray:
    return np.stack([w.values for w in words])


def parse_word(h: int, line: str) -> Word:
    return read_words(io.StringIO(f"# m={len(line).bit_length() - 1} h={h}\n{line}\n"))[0]
