"""Quotient recurrences q(n) = a(n)/a(n-1) derived from term recurrences."""

from __future__ import annotations

from math import ceil

from ..exact import PolyQ, RatFun
from .recurrences import LinearRecurrence, ModelError, NonhomRecurrence, QuotientRecurrence


def quotient_form(rec: LinearRecurrence) -> QuotientRecurrence:
    """Divide through by Q(n) a(n-1): coefficient i attaches to 1/(q(n-1)...q(n-i))."""
    coeffs = tuple(RatFun(p, rec.lhs) for p in rec.rhs)
    # q(n-i) must exist for every lag that carries weight
    deepest = max((i for i, c in enumerate(coeffs) if not c.is_zero()), default=0)
    start = max(rec.valid_from, rec.offset + 1 + deepest)
    return QuotientRecurrence(coeffs, start)


def integer_roots(p: PolyQ, lo: int, hi: int | None = None) -> list:
    """Integer roots of a rational polynomial in [lo, hi] (hi defaults to the Cauchy bound)."""
    if p.is_zero():
        raise ModelError("the zero polynomial vanishes everywhere")
    if p.radical:
        raise ModelError("integer root search needs rational coefficients")
    bound = 1 + max((abs(c / p.lead()) for c in p.coeffs[:-1]), default=0)
    top = ceil(bound) if hi is None else min(hi, ceil(bound))
    return [n for n in range(lo, top + 1) if p(n) == 0]


def _check_nonvanishing(f: RatFun, lo: int, what: str) -> None:
    if f.is_zero():
        raise ModelError(f"{what} vanishes identically")
    roots = integer_roots(f.num, lo)
    if roots:
        raise ModelError(f"{what} vanishes at n = {roots[0]}")


def nonhom_quotient_form(rec: NonhomRecurrence) -> QuotientRecurrence:
    """Short quotient recurrence for a(n) = R a(n-1) + S [+ S a(n-2) + T form].

    First order:  q = R + S/S1 - (R1 S / S1) / q1.
    Second order: q = R + S/q1 + (T/T1) [1 - R1/q1 - S1/(q1 q2)].
    """
    start = max(rec.valid_from + 1, rec.offset + 2)
    R, S, T = rec.R, rec.S, rec.T
    if T is None:
        S1 = S.shift(-1)
        _check_nonvanishing(S, start - 1, "S(n-1)")
        return QuotientRecurrence((R + S / S1, -(R.shift(-1) * S) / S1), start)
    if T.is_zero():
        return QuotientRecurrence((R, S), max(rec.valid_from, rec.offset + 2))
    T1 = T.shift(-1)
    _check_nonvanishing(T, start - 1, "T(n-1)")
    ratio = T / T1
    start = max(start, rec.offset + 3)
    return QuotientRecurrence(
        (R + ratio, S - ratio * R.shift(-1), -(ratio * S.shift(-1))), start
    )
