"""Bundled interlacing certificates."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict

from ..exact import PolyQ, Quad, RatFun
from ..model import catalog_get, quotient_form
from .types import AT, NEXT, CertificateError, PlanTerm, SandwichCertificate
from .verify import verify_sandwich

n = RatFun.x()
PHI2 = Quad(Fraction(3, 2), Fraction(1, 2), 5)
ALPHA2 = Quad(1, 1, 2)


def _rec(name: str, **params):
    return catalog_get(name, **params).primary


def motzkin() -> SandwichCertificate:
    return SandwichCertificate("motzkin", _rec("motzkin"), 6 * n / (2 * n + 3),
                               "increasing", 3, 3, prefix_lo=1)


def derangements(bound=None) -> SandwichCertificate:
    b = n - Fraction(1, 2) if bound is None else bound
    return SandwichCertificate("derangements", _rec("derangements"), b, "increasing", 3, 4)


def derangements_bad() -> SandwichCertificate:
    c = derangements(n + 1)
    return SandwichCertificate("derangements_bad", c.sequence, c.bound, c.direction, c.base_lo, c.base_hi)


def t2_matrices() -> SandwichCertificate:
    return SandwichCertificate("t2_matrices", _rec("t2_matrices"), n - 1, "increasing", 6, 7)


def _sec1_plan() -> tuple:
    # (2n-5) = (n-1) + (n-4) moves the negative lag-3 weight into a (q3 - 1) factor
    c = quotient_form(_rec("sec_struct", l=1)).coeffs
    w = 1 / (n + 2)
    return (
        PlanTerm(c[0]),
        PlanTerm(c[1], (), (1,)),
        PlanTerm((n - 1) * w, (), (1, 2)),
        PlanTerm((n - 4) * w, ((3, 1),), (1, 2, 3)),
    )


def _uniform_plan() -> tuple:
    """The unsplit recurrence with one substitution pattern for every term:
    q(n-k) -> b(n-k+1) on the lower side and b(n-k) on the upper side.
    The pattern is wrong for the negative lag-3 term."""
    c = quotient_form(_rec("sec_struct", l=1)).coeffs
    return tuple(
        PlanTerm(ci, (), tuple(range(1, i + 1)), lower=(NEXT,) * i, upper=(AT,) * i)
        for i, ci in enumerate(c)
    )


def sec_struct_1(split: bool = True) -> SandwichCertificate:
    b = PHI2 * 2 * n / (2 * n + 3)
    return SandwichCertificate("sec_struct_1" if split else "sec_struct_1_unsplit",
                               _rec("sec_struct", l=1), b, "increasing", 6, 9,
                               plan=_sec1_plan() if split else _uniform_plan(), prefix_lo=1)


def sec_struct_2() -> SandwichCertificate:
    # b(n) = a(n-1) with a(n) = alpha2 (8n^2+20n+11) / (8(n+2)^2)
    b = ALPHA2 * (8 * n * n + 4 * n - 1) / (8 * (n + 1) ** 2)
    return SandwichCertificate("sec_struct_2", _rec("sec_struct", l=2), b, "increasing", 7, 44,
                               prefix_lo=1)


BUNDLED: Dict[str, Callable[[], SandwichCertificate]] = {
    "motzkin": motzkin,
    "derangements": derangements,
    "t2_matrices": t2_matrices,
    "sec_struct_1": sec_struct_1,
    "sec_struct_2": sec_struct_2,
}

NEGATIVE_CONTROLS: Dict[str, Callable[[], SandwichCertificate]] = {
    "derangements_bad": derangements_bad,
    "sec_struct_1_unsplit": lambda: sec_struct_1(split=False),
}


def bundled_certificate(name: str) -> SandwichCertificate:
    table = {**BUNDLED, **NEGATIVE_CONTROLS}
    if name not in table:
        raise CertificateError(f"no bundled certificate named {name!r}")
    return table[name]()


def verify_sandwich_catalog(name: str):
    return verify_sandwich(bundled_certificate(name))
