"""Exact term evaluation and quotient sequences."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Optional

from ..exact import scalar
from ..model.recurrences import (
    BenderCanfieldDefinition,
    ConvolutionRecurrence,
    LinearRecurrence,
    NonhomRecurrence,
    QuotientRecurrence,
    TwoIndexRecurrence,
)


class EvaluationError(ValueError):
    """Raised when a term cannot be computed; ``index`` names the culprit."""

    def __init__(self, message: str, index: Optional[int] = None):
        super().__init__(message)
        self.index = index


@dataclass(frozen=True)
class TermList:
    origin_index: int
    terms: tuple

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(scalar(t) for t in self.terms))

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, n: int):
        i = n - self.origin_index
        if not 0 <= i < len(self.terms):
            raise IndexError(f"index {n} outside [{self.origin_index}, {self.end}]")
        return self.terms[i]

    def get(self, n: int, default=Fraction(0)):
        i = n - self.origin_index
        return self.terms[i] if 0 <= i < len(self.terms) else default

    @property
    def end(self) -> int:
        """Last index held."""
        return self.origin_index + len(self.terms) - 1

    def indices(self) -> range:
        return range(self.origin_index, self.end + 1)


@dataclass(frozen=True)
class QuotientSequence:
    origin_index: int
    quotients: tuple

    def __len__(self):
        return len(self.quotients)

    def __getitem__(self, n: int):
        i = n - self.origin_index
        if not 0 <= i < len(self.quotients):
            raise IndexError(f"q({n}) not held")
        return self.quotients[i]

    @property
    def end(self) -> int:
        return self.origin_index + len(self.quotients) - 1

    def indices(self) -> range:
        return range(self.origin_index, self.end + 1)


# -- evaluators ------------------------------------------------------------

def _eval_linear(rec: LinearRecurrence, count: int) -> TermList:
    off = rec.offset
    vals: list = []
    init = rec.initial_terms
    lhs, rhs = rec.lhs, rec.rhs
    for i in range(count):
        n = off + i
        if i < len(init):
            vals.append(init[i])
            continue
        q = lhs(n)
        if q == 0:
            raise EvaluationError(f"{rec.name}: Q({n}) = 0", n)
        total = Fraction(0)
        for lag, p in enumerate(rhs):
            j = i - 1 - lag
            if j < 0 or p.is_zero():
                continue
            a = vals[j]
            if a:
                total = total + p(n) * a
        vals.append(scalar(total / q))
    return TermList(off, vals)


def _eval_convolution(rec: ConvolutionRecurrence, count: int) -> TermList:
    l, s = rec.rank, rec.span_shift
    vals = list(rec.initial_terms[:count])

    def at(m):
        return Fraction(1) if m == -1 else vals[m]

    while len(vals) < count:
        n = len(vals) - 1
        total = vals[n]
        for m in range(l, n + s):
            total = total + at(m) * at(n - m - 1 + s)
        vals.append(total)
    return TermList(0, vals)


def _eval_nonhom(rec: NonhomRecurrence, count: int) -> TermList:
    off = rec.offset
    vals = list(rec.initial_terms[:count])
    while len(vals) < count:
        i = len(vals)
        n = off + i
        try:
            v = rec.R(n) * vals[i - 1]
            if rec.T is None:
                v = v + rec.S(n)
            else:
                v = v + rec.S(n) * vals[i - 2] + rec.T(n)
        except ZeroDivisionError:
            raise EvaluationError(f"{rec.name}: coefficient pole at n = {n}", n) from None
        vals.append(scalar(v))
    return TermList(off, vals)


def exponent_egf_coefficients(defn: BenderCanfieldDefinition, count: int) -> list:
    """c_1..c_count with exp(sum c_k x^k / k!) the generating function."""
    a = defn.a(count)
    if defn.form == "factorial":
        return a
    return [ak * factorial(k - 1) for k, ak in enumerate(a, start=1)]


def _eval_bc(defn: BenderCanfieldDefinition, count: int) -> TermList:
    c = exponent_egf_coefficients(defn, max(count, 1))
    b = [Fraction(1)]
    # b_{n+1} = sum_k C(n, k) c_{k+1} b_{n-k}
    while len(b) < count:
        n = len(b) - 1
        b.append(sum((comb(n, k) * c[k] * b[n - k] for k in range(n + 1) if c[k]), Fraction(0)))
    return TermList(0, b[:count])


def eval_terms(definition, count: int) -> TermList:
    """The first ``count`` terms, starting at the definition's offset."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    if hasattr(definition, "definitions"):
        definition = definition.primary
    if isinstance(definition, LinearRecurrence):
        return _eval_linear(definition, count)
    if isinstance(definition, ConvolutionRecurrence):
        return _eval_convolution(definition, count)
    if isinstance(definition, NonhomRecurrence):
        return _eval_nonhom(definition, count)
    if isinstance(definition, BenderCanfieldDefinition):
        return _eval_bc(definition, count)
    if isinstance(definition, TwoIndexRecurrence):
        raise TypeError("two-index recurrences are evaluated with triangle_eval")
    raise TypeError(f"cannot evaluate {type(definition).__name__}")


def eval_upto(definition, last_index: int) -> TermList:
    """Terms from the offset through ``last_index`` inclusive."""
    if hasattr(definition, "definitions"):
        definition = definition.primary
    return eval_terms(definition, last_index - getattr(definition, "offset", 0) + 1)


def divide_by_factorial(t: TermList) -> TermList:
    return TermList(t.origin_index,
                    [x / factorial(n) for n, x in zip(t.indices(), t.terms)])


# -- quotients ---------------------------------------------------------------

def quotients(t: TermList, start: Optional[int] = None) -> QuotientSequence:
    """q(n) = a(n)/a(n-1) for n >= start.

    By default leading zero terms are skipped and the sequence starts one
    past the first nonzero term; a zero after that is an error.
    """
    if start is None:
        first = next((n for n in t.indices() if t[n] != 0), None)
        if first is None:
            raise EvaluationError("all terms are zero")
        start = first + 1
    if start - 1 < t.origin_index:
        raise EvaluationError(f"q({start}) needs a({start - 1}), which is not held", start)
    out = []
    for n in range(start, t.end + 1):
        prev = t[n - 1]
        if prev == 0:
            raise EvaluationError(f"a({n - 1}) = 0, so q({n}) is undefined", n - 1)
        out.append(scalar(t[n] / prev))
    return QuotientSequence(start, tuple(out))


def eval_quotient_recursion(qrec: QuotientRecurrence, seed: QuotientSequence, last: int) -> QuotientSequence:
    """Run q(n) = sum c_i(n)/(q(n-1)...q(n-i)) from ``qrec.valid_from`` through ``last``.

    ``seed`` supplies the values before ``valid_from``.
    """
    start = qrec.valid_from
    if seed.origin_index > start - qrec.order:
        raise EvaluationError("seed does not reach back far enough", seed.origin_index)
    vals = {n: seed[n] for n in range(seed.origin_index, min(seed.end, start - 1) + 1)}
    for n in range(start, last + 1):
        qs = [vals[n - j] for j in range(1, qrec.order + 1)]
        if any(v == 0 for v in qs):
            raise EvaluationError(f"zero quotient before n = {n}", n)
        try:
            vals[n] = qrec.rhs(n, qs)
        except ZeroDivisionError:
            raise EvaluationError(f"coefficient pole at n = {n}", n) from None
    lo = seed.origin_index
    return QuotientSequence(lo, tuple(vals[n] for n in range(lo, last + 1)))
