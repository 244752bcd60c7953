"""Log-behavior classification and the finite-sequence tests."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

from ..exact import scalar, sign
from .terms import QuotientSequence, TermList


class Verdict(enum.Enum):
    LOG_CONVEX = "LogConvex"
    LOG_CONCAVE = "LogConcave"
    GEOMETRIC = "Geometric"
    LOG_FIBONACCI = "LogFibonacci"
    INDEFINITE = "Indefinite"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ClassificationReport:
    window: tuple
    delta_signs: tuple
    verdict: Verdict
    first_violation: Optional[int] = None

    @property
    def first_delta_index(self) -> int:
        return self.window[0] + 1

    @property
    def starting_sign(self) -> int:
        """Sign of the first Delta; for LogFibonacci this is the parity the window starts with."""
        return self.delta_signs[0] if self.delta_signs else 0


def delta(t: TermList, n: int):
    """a(n)^2 - a(n-1) a(n+1)."""
    return scalar(t[n] * t[n] - t[n - 1] * t[n + 1])


def classify_window(t: TermList, lo: int, hi: int) -> ClassificationReport:
    """Classify the terms a(lo..hi) by the signs of Delta(n), lo < n < hi."""
    if hi - lo + 1 < 3:
        raise ValueError(f"window [{lo}, {hi}] holds fewer than 3 terms")
    if lo < t.origin_index or hi > t.end:
        raise ValueError(f"window [{lo}, {hi}] outside the terms [{t.origin_index}, {t.end}]")
    idx = list(range(lo + 1, hi))
    signs = tuple(sign(delta(t, n)) for n in idx)
    first_zero = next((n for n, s in zip(idx, signs) if s == 0), None)

    if all(s == 0 for s in signs):
        return ClassificationReport((lo, hi), signs, Verdict.GEOMETRIC)
    if all(s <= 0 for s in signs):
        return ClassificationReport((lo, hi), signs, Verdict.LOG_CONVEX, first_zero)
    if all(s >= 0 for s in signs):
        return ClassificationReport((lo, hi), signs, Verdict.LOG_CONCAVE, first_zero)
    if all(s != 0 for s in signs) and all(a == -b for a, b in zip(signs, signs[1:])):
        return ClassificationReport((lo, hi), signs, Verdict.LOG_FIBONACCI)
    lead = next(s for s in signs if s != 0)
    bad = next(n for n, s in zip(idx, signs) if s == -lead)
    return ClassificationReport((lo, hi), signs, Verdict.INDEFINITE, bad)


def constant_coeff_classify(C1, C2, a0, a1, horizon: int = 64) -> Verdict:
    """Log-behavior of a(n) = C1 a(n-1) - C2 a(n-2), read off from its first three terms."""
    C1, C2, a0, a1 = (scalar(v) for v in (C1, C2, a0, a1))
    if not (C1 > 0 and C2 > 0):
        raise ValueError("C1 and C2 must be positive")
    if not (a0 > 0 and a1 > 0):
        raise ValueError("a0 and a1 must be positive")
    prev, cur = a0, a1
    for n in range(2, horizon + 1):
        prev, cur = cur, scalar(C1 * cur - C2 * prev)
        if cur <= 0:
            raise ValueError(f"term a({n}) = {cur} is not positive")
    a2 = scalar(C1 * a1 - C2 * a0)
    d = sign(a0 * a2 - a1 * a1)
    if d > 0:
        return Verdict.LOG_CONVEX
    if d < 0:
        return Verdict.LOG_CONCAVE
    return Verdict.GEOMETRIC


@dataclass(frozen=True)
class NewtonReport:
    log_concave: bool
    normalized_log_concave: bool


def _lc(xs) -> bool:
    return all(xs[k] * xs[k] >= xs[k - 1] * xs[k + 1] for k in range(1, len(xs) - 1))


def newton_test(a, n: int) -> NewtonReport:
    """Log-concavity of a_0..a_n and of a_k / C(n, k)."""
    a = [scalar(v) for v in a]
    if len(a) != n + 1:
        raise ValueError(f"expected {n + 1} entries, got {len(a)}")
    return NewtonReport(_lc(a), _lc([v / comb(n, k) for k, v in enumerate(a)]))


@dataclass(frozen=True)
class SemiadditivityReport:
    limit: int
    checked: int
    lower_violations: tuple
    upper_violations: tuple

    @property
    def ok(self) -> bool:
        return not self.lower_violations and not self.upper_violations


def semiadditivity_check(t: TermList, limit: int, upper: bool = True) -> SemiadditivityReport:
    """a_n a_m <= a_{n+m} <= C(n+m, n) a_n a_m for 1 <= m, n with m + n <= limit."""
    if t.origin_index != 0 or t[0] != 1:
        raise ValueError("semi-additivity needs a(0) = 1")
    if t.end < limit:
        raise ValueError(f"terms stop at {t.end}, need {limit}")
    lo_bad, hi_bad, count = [], [], 0
    for s in range(2, limit + 1):
        for m in range(1, s // 2 + 1):
            n = s - m
            prod = t[m] * t[n]
            count += 1
            if prod > t[s]:
                lo_bad.append((m, n))
            if upper and t[s] > comb(s, m) * prod:
                hi_bad.append((m, n))
    return SemiadditivityReport(limit, count, tuple(lo_bad), tuple(hi_bad))


# -- limits ------------------------------------------------------------------

@dataclass(frozen=True)
class LimitEstimate:
    index: int
    value: object
    increment: object
    direction: str


def limit_estimate(q: QuotientSequence, tail: int) -> LimitEstimate:
    """Last quotient and last increment, after checking the tail is monotone."""
    if tail < 2 or tail > len(q):
        raise ValueError(f"tail must be between 2 and {len(q)}")
    vals = q.quotients[-tail:]
    diffs = [scalar(b - a) for a, b in zip(vals, vals[1:])]
    if all(sign(d) >= 0 for d in diffs):
        direction = "increasing"
    elif all(sign(d) <= 0 for d in diffs):
        direction = "decreasing"
    else:
        raise ValueError("quotient tail is not monotone")
    return LimitEstimate(q.end, vals[-1], diffs[-1], direction)


def within(value, target, tol) -> bool:
    """|value - target| < tol, decided exactly."""
    d = scalar(value - target)
    if isinstance(tol, float):
        tol = Fraction(repr(tol))
    tol = scalar(tol)
    return sign(d - tol) < 0 and sign(d + tol) > 0
