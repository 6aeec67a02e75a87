"""Exact Gaussian integers over Python's unbounded ints."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class GaussInt:
    re: int
    im: int

    def __add__(self, other: "GaussInt") -> "GaussInt":
        return GaussInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussInt") -> "GaussInt":
        return GaussInt(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "GaussInt") -> "GaussInt":
        return GaussInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __neg__(self) -> "GaussInt":
        return GaussInt(-self.re, -self.im)

    def conj(self) -> "GaussInt":
        return GaussInt(self.re, -self.im)

    def abs2(self) -> int:
        """|z|^2 = re^2 + im^2, exact."""
        return self.re * self.re + self.im * self.im

    def __repr__(self) -> str:
        return f"({self.re}{self.im:+d}i)"


ONE = GaussInt(1, 0)
I = GaussInt(0, 1)

# i^k for k in Z4; the quaternary symbol alphabet maps onto these.
I_POWERS = (GaussInt(1, 0), GaussInt(0, 1), GaussInt(-1, 0), GaussInt(0, -1))


def root_of_unity_power(h: int, value: int) -> GaussInt:
    """omega^value where omega is the principal primitive 2^h-th root of unity.

    Only h = 1 (omega = -1) and h = 2 (omega = i) keep the result inside the
    Gaussian integers; larger h would need cyclotomic integers and is refused.
    """
    if h == 1:
        return GaussInt(1 - 2 * (value & 1), 0)
    if h == 2:
        return I_POWERS[value & 3]
    raise ValueError(f"exact arithmetic supports h in {{1, 2}}, got h={h}")
