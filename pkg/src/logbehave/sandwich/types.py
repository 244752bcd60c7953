"""Interlacing certificates and their reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Tuple

from ..exact import PolyQ, RatFun, RayVerdict, Status
from ..exact.positivity import DEFAULT_MAX_SHIFT
from ..model.recurrences import LinearRecurrence

AT = "at"        # b(n - j)
NEXT = "next"    # b(n - j + 1)
SELECTORS = (AT, NEXT)


class CertificateError(ValueError):
    """The certificate itself is malformed (bad plan identity, bad window, ...)."""


@dataclass(frozen=True)
class PlanTerm:
    """``coeff(n) * prod (q(n-j) - theta) / prod q(n-k)``.

    ``num`` holds (j, theta) pairs and ``den`` the lags k.  ``lower`` and
    ``upper`` optionally fix the bound selector for every factor, numerator
    factors first; None lets the verifier pick the sound endpoint.
    """

    coeff: RatFun
    num: Tuple[Tuple[int, object], ...] = ()
    den: Tuple[int, ...] = ()
    lower: Optional[Tuple[str, ...]] = None
    upper: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "coeff", RatFun._lift(self.coeff))
        object.__setattr__(self, "num", tuple((int(j), t) for j, t in self.num))
        object.__setattr__(self, "den", tuple(int(k) for k in self.den))
        width = len(self.num) + len(self.den)
        for label in ("lower", "upper"):
            sel = getattr(self, label)
            if sel is None:
                continue
            sel = tuple(sel) or None if width == 0 else tuple(sel)
            object.__setattr__(self, label, sel)
            if sel is None:
                continue
            if len(sel) != width or any(s not in SELECTORS for s in sel):
                raise CertificateError(f"{label} selectors must list {width} of {SELECTORS}")
        if any(j < 1 for j, _ in self.num) or any(k < 1 for k in self.den):
            raise CertificateError("lags must be positive")

    @property
    def max_lag(self) -> int:
        return max([j for j, _ in self.num] + list(self.den) + [0])


@dataclass(frozen=True)
class SandwichCertificate:
    name: str
    sequence: LinearRecurrence
    bound: RatFun
    direction: str
    base_lo: int
    base_hi: int
    plan: Optional[Tuple[PlanTerm, ...]] = None
    max_shift: int = DEFAULT_MAX_SHIFT
    prefix_lo: Optional[int] = None
    audit: int = 64

    def __post_init__(self):
        object.__setattr__(self, "bound", RatFun._lift(self.bound))
        if self.plan is not None:
            object.__setattr__(self, "plan", tuple(self.plan))
        if self.direction not in ("increasing", "decreasing"):
            raise CertificateError(f"direction must be increasing or decreasing, not {self.direction!r}")
        if self.base_hi < self.base_lo:
            raise CertificateError("empty base window")
        if self.prefix_lo is not None and self.prefix_lo > self.base_lo:
            raise CertificateError("prefix must start at or before the base window")


@dataclass(frozen=True)
class BaseCheck:
    n: int
    kind: str           # "lower", "upper", "monotone", "audit"
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class SandwichReport:
    name: str
    status: Status
    base_results: Tuple[BaseCheck, ...]
    lower_step: Optional[RayVerdict]
    upper_step: Optional[RayVerdict]
    reduced_lower: PolyQ = field(default_factory=PolyQ)
    reduced_upper: PolyQ = field(default_factory=PolyQ)
    side_conditions: Tuple[Tuple[str, RayVerdict], ...] = ()
    step_start: Optional[int] = None
    notes: Tuple[str, ...] = ()

    @property
    def proved(self) -> bool:
        return self.status is Status.PROVED
