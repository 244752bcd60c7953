"""Reduced rational functions in one variable."""

from __future__ import annotations

from fractions import Fraction

from .poly import PolyQ, _inv
from .quad import Quad, format_scalar, scalar


class RatFun:
    """``num/den`` with coprime parts and a monic denominator.

    The normalization makes equal functions compare equal structurally,
    which the verifiers rely on for identity checks.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_poly(num)
        den = PolyQ([1]) if den is None else _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = PolyQ(), PolyQ([1])
        elif not den.is_constant():
            g = num.gcd(den)
            if not g.is_constant():
                num, den = num // g, den // g
        lc = _inv(den.lead())
        object.__setattr__(self, "num", num * lc)
        object.__setattr__(self, "den", den * lc)

    def __setattr__(self, name, value):
        raise AttributeError("RatFun is immutable")

    @classmethod
    def const(cls, c) -> "RatFun":
        return cls(PolyQ.const(c))

    @classmethod
    def x(cls) -> "RatFun":
        return cls(PolyQ.x())

    # -- queries ----------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Quad, PolyQ)):
            other = RatFun(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _lift(other) -> "RatFun":
        if isinstance(other, RatFun):
            return other
        if isinstance(other, (int, Fraction, Quad, PolyQ)):
            return RatFun(other)
        raise TypeError(f"cannot combine RatFun with {type(other).__name__}")

    def __add__(self, other):
        try:
            o = RatFun._lift(other)
        except TypeError:
            return NotImplemented
        if self.den == o.den:
            return RatFun(self.num + o.num, self.den)
        return RatFun(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __sub__(self, other):
        try:
            o = RatFun._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return RatFun._lift(other) - self

    def __mul__(self, other):
        try:
            o = RatFun._lift(other)
        except TypeError:
            return NotImplemented
        return RatFun(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = RatFun._lift(other)
        except TypeError:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFun(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return RatFun._lift(other) / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return RatFun(1) / (self ** (-k))
        return RatFun(self.num ** k, self.den ** k)

    # -- calculus and substitution ----------------------------------------
    def derivative(self) -> "RatFun":
        p, q = self.num, self.den
        return RatFun(p.derivative() * q - p * q.derivative(), q * q)

    def shift(self, c) -> "RatFun":
        """``r(x + c)``."""
        return RatFun(self.num.shift(c), self.den.shift(c))

    def compose(self, other: PolyQ) -> "RatFun":
        return RatFun(self.num.compose(other), self.den.compose(other))

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at {format_scalar(x)}")
        return scalar(self.num(x) / d)

    def eval(self, x):
        return self(x)

    # -- rendering --------------------------------------------------------
    def to_str(self, var: str = "n") -> str:
        if self.den == 1:
            return self.num.to_str(var)
        n = self.num.to_str(var)
        d = self.den.to_str(var)
        if not self.num.is_constant() and len(self.num.coeffs) > 1:
            n = f"({n})"
        return f"{n}/({d})"

    def __repr__(self):
        return f"RatFun({self.to_str()})"

    def __str__(self):
        return self.to_str()


def _as_poly(p) -> PolyQ:
    if isinstance(p, PolyQ):
        return p
    if isinstance(p, (int, Fraction, Quad)):
        return PolyQ.const(p)
    raise TypeError(f"not a polynomial: {p!r}")
