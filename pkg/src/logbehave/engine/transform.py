"""The exponential (Bender-Canfield) transform and its hypothesis."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Optional

from ..exact import SeriesQ, series_exp
from ..model.recurrences import BenderCanfieldDefinition
from .terms import TermList, eval_terms


def bc_transform(a, count: int, form: str = "factorial") -> TermList:
    """b_n = n! [x^n] exp(sum_k a_k x^k / w_k) for n < count.

    ``a`` lists a_1, a_2, ... and is zero-extended; w_k = k! by default and
    w_k = k for ``form="bc"``.
    """
    return eval_terms(BenderCanfieldDefinition("bc", tuple(a), form=form), count)


def bc_transform_series(a, count: int, form: str = "factorial") -> TermList:
    """Same numbers through power-series exponentiation; an independent route."""
    order = max(count, 1)
    cs = [Fraction(0)] * order
    for k, ak in enumerate(a, start=1):
        if k >= order:
            break
        w = factorial(k) if form == "factorial" else k
        cs[k] = Fraction(ak) / w
    return TermList(0, series_exp(SeriesQ(cs, order)).egf_terms()[:count])


@dataclass(frozen=True)
class HypothesisReport:
    ok: bool
    violation: Optional[int] = None
    reason: str = ""


def bc_hypothesis_check(a, form: str = "bc") -> HypothesisReport:
    """1, a_1, a_2, ... must be nonnegative, log-concave and free of internal zeros.

    The condition is stated for the x^k/k weights.  With ``form="factorial"``
    the input is first rewritten as a_k/(k-1)!; the factorial weights are
    themselves log-concave, so this only ever helps.
    """
    a = [Fraction(v) for v in a]
    if form == "factorial":
        a = [v / factorial(k - 1) for k, v in enumerate(a, start=1)]
    elif form != "bc":
        raise ValueError(f"unknown form {form!r}")
    seq = [Fraction(1)] + a
    for k, v in enumerate(seq):
        if v < 0:
            return HypothesisReport(False, k, "negative entry")
    while len(seq) > 1 and seq[-1] == 0:
        seq.pop()
    for k, v in enumerate(seq):
        if v == 0:
            return HypothesisReport(False, k, "internal zero")
    for k in range(1, len(seq) - 1):
        if seq[k] * seq[k] < seq[k - 1] * seq[k + 1]:
            return HypothesisReport(False, k, "not log-concave")
    return HypothesisReport(True)
