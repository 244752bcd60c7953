"""Truncated power series with rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence


@dataclass(frozen=True)
class SeriesQ:
    """Coefficients c[0..order] of a power series modulo x^(order+1)."""

    coeffs: tuple
    order: int

    def __init__(self, coeffs: Sequence, order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = (cs + [Fraction(0)] * (order + 1))[: order + 1]
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "order", order)

    @classmethod
    def x(cls, order: int) -> "SeriesQ":
        return cls([0, 1], order)

    @classmethod
    def exp_minus_one(cls, order: int) -> "SeriesQ":
        return cls([0] + [Fraction(1, factorial(k)) for k in range(1, order + 1)], order)

    def _check(self, other: "SeriesQ") -> None:
        if self.order != other.order:
            raise ValueError(f"truncation orders differ: {self.order} vs {other.order}")

    def __add__(self, other: "SeriesQ") -> "SeriesQ":
        self._check(other)
        return SeriesQ([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __sub__(self, other: "SeriesQ") -> "SeriesQ":
        self._check(other)
        return SeriesQ([a - b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __neg__(self) -> "SeriesQ":
        return SeriesQ([-a for a in self.coeffs], self.order)

    def __mul__(self, other) -> "SeriesQ":
        if isinstance(other, (int, Fraction)):
            return SeriesQ([a * other for a in self.coeffs], self.order)
        self._check(other)
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                out[i + j] += a * other.coeffs[j]
        return SeriesQ(out, n)

    __rmul__ = __mul__

    def derivative(self) -> "SeriesQ":
        """Formal derivative; the top coefficient becomes 0."""
        return SeriesQ([k * c for k, c in enumerate(self.coeffs)][1:], self.order)

    def egf_terms(self) -> list:
        """n! * c[n], the sequence the series enumerates exponentially."""
        return [c * factorial(k) for k, c in enumerate(self.coeffs)]


def series_exp(a: SeriesQ) -> SeriesQ:
    """exp(a) for a with zero constant term.

    From b' = a' b:  n b_n = sum_{k=1..n} k a_k b_{n-k}.
    """
    if a.coeffs[0] != 0:
        raise ValueError("series_exp needs a zero constant term")
    n = a.order
    b = [Fraction(0)] * (n + 1)
    b[0] = Fraction(1)
    for m in range(1, n + 1):
        s = Fraction(0)
        for k in range(1, m + 1):
            if a.coeffs[k]:
                s += k * a.coeffs[k] * b[m - k]
        b[m] = s / m
    return SeriesQ(b, n)
