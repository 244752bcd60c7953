"""Condition sets, derivative decompositions and reports for the calculus checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

from ..exact import PolyQ, RatFun, RayVerdict, Status
from ..exact.positivity import DEFAULT_MAX_SHIFT
from ..model.recurrences import LinearRecurrence
from ..sandwich.types import BaseCheck

INCREASING = "increasing"
DECREASING = "decreasing"


class CalculusError(ValueError):
    """A condition set or decomposition is malformed."""


@dataclass(frozen=True)
class CalculusConditionSet:
    """Quotient recurrence f = R + S/f1 [+ T/(f1 f2)] with a priori bounds m <= f <= M.

    ``M`` may be omitted when only the lower bound is used.  ``m_squared``
    replaces ``m`` by the radical bound sqrt(m_squared(x)); only the
    Wronskian route accepts it.  ``sequence`` supplies the exact terms for
    the base prefix; ``extra`` holds the coefficients of f = ... + c_i/(f1...fi)
    beyond T for recurrences of higher order.
    """

    name: str
    R: RatFun
    S: RatFun
    m: Optional[RatFun]
    M: Optional[RatFun] = None
    n0: Fraction = Fraction(1)
    direction: str = INCREASING
    base_check_hi: Optional[int] = None
    T: Optional[RatFun] = None
    sequence: Optional[LinearRecurrence] = None
    base_check_lo: Optional[int] = None
    m_squared: Optional[RatFun] = None
    max_shift: int = DEFAULT_MAX_SHIFT
    extra: Tuple[RatFun, ...] = ()

    def __post_init__(self):
        for label in ("R", "S", "T", "m", "M", "m_squared"):
            v = getattr(self, label)
            if v is not None and not isinstance(v, RatFun):
                object.__setattr__(self, label, RatFun._lift(v))
        object.__setattr__(self, "n0", Fraction(self.n0))
        if self.direction not in (INCREASING, DECREASING):
            raise CalculusError(f"direction must be {INCREASING} or {DECREASING}, not {self.direction!r}")
        object.__setattr__(self, "extra", tuple(RatFun._lift(e) for e in self.extra))
        if self.extra and self.T is None:
            raise CalculusError("coefficients beyond T need T")
        if (self.m is None) == (self.m_squared is None):
            raise CalculusError("give exactly one of m and m_squared")

    @property
    def coeffs(self) -> Tuple[RatFun, ...]:
        out = (self.R, self.S)
        if self.T is not None:
            out += (self.T,) + self.extra
        return out

    @property
    def sign(self) -> int:
        return 1 if self.direction == INCREASING else -1


@dataclass(frozen=True)
class DecompTerm:
    """``coeff(x) * f(x-lag)^power * (u f(x-lag) + v) [* f'(x-lag)]``."""

    coeff: RatFun
    u: RatFun
    v: RatFun
    derivative: bool = False
    lag: int = 1
    power: int = 0

    def __post_init__(self):
        for label in ("coeff", "u", "v"):
            object.__setattr__(self, label, RatFun._lift(getattr(self, label)))
        if self.lag < 1:
            raise CalculusError("lags must be positive")


@dataclass(frozen=True)
class TermDecomposition:
    name: str
    terms: Tuple[DecompTerm, ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))


@dataclass(frozen=True)
class CalculusReport:
    name: str
    method: str
    status: Status
    condition_results: Tuple[Tuple[str, RayVerdict], ...] = ()
    reduced_key: PolyQ = field(default_factory=PolyQ)
    base_results: Tuple[BaseCheck, ...] = ()
    notes: Tuple[str, ...] = ()

    @property
    def proved(self) -> bool:
        return self.status is Status.PROVED

    def condition(self, label: str) -> RayVerdict:
        for name, v in self.condition_results:
            if name == label:
                return v
        raise KeyError(label)


@dataclass(frozen=True)
class GridPoint:
    n: int
    k: int
    value: Fraction


@dataclass(frozen=True)
class TwoIndexReport:
    name: str
    label: str
    grid_points: int
    grid_violations: Tuple[GridPoint, ...]
    wronskians: Tuple[Tuple[str, str], ...]
    reduced_identity: Optional[bool]
    notes: Tuple[str, ...] = ()

    @property
    def grid_ok(self) -> bool:
        return not self.grid_violations

    @property
    def wronskians_ok(self) -> bool:
        return bool(self.wronskians) and all(s in ("zero", "nonpositive") for _, s in self.wronskians)

    @property
    def verified(self) -> bool:
        return self.label == "conditions verified"
