"""Exact numbers a + b*sqrt(d) over the rationals.

Rationals are plain :class:`fractions.Fraction` values; a :class:`Quad` only
appears when a genuine square root is involved.  All arithmetic helpers in this
package accept either kind and normalize a Quad with ``b == 0`` back to a
Fraction, so rational computations never pay for the extension.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Union


class MixedRadicalError(ValueError):
    """Raised when two values from different quadratic fields are combined."""


def _squarefree(d: int) -> bool:
    if d < 2:
        return d == 1
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


class Quad:
    """The real number ``a + b*sqrt(d)`` with rational a, b and squarefree d."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d: int = 0):
        a = Fraction(a)
        b = Fraction(b)
        d = int(d)
        if d < 0:
            raise ValueError("d must be nonnegative")
        if d not in (0, 1) and not _squarefree(d):
            raise ValueError(f"d = {d} is not squarefree; use Quad.sqrt for normalization")
        if d == 1:
            a, b, d = a + b, Fraction(0), 0
        if b == 0 or d == 0:
            b, d = Fraction(0), 0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("Quad is immutable")

    @classmethod
    def sqrt(cls, n: int) -> "Scalar":
        """Exact square root of a nonnegative integer, e.g. sqrt(8) = 2*sqrt(2)."""
        n = int(n)
        if n < 0:
            raise ValueError("square root of a negative integer")
        r = isqrt(n)
        if r * r == n:
            return Fraction(r)
        coeff, rest, k = 1, n, 2
        while k * k <= rest:
            while rest % (k * k) == 0:
                rest //= k * k
                coeff *= k
            k += 1
        return cls(0, coeff, rest)

    # -- coercion ---------------------------------------------------------
    @staticmethod
    def _coerce(x) -> "Quad":
        if isinstance(x, Quad):
            return x
        if isinstance(x, (int, Fraction)):
            return Quad(x)
        raise TypeError(f"cannot combine Quad with {type(x).__name__}")

    @staticmethod
    def _field(x: "Quad", y: "Quad") -> int:
        if x.d == y.d or y.d == 0:
            return x.d
        if x.d == 0:
            return y.d
        raise MixedRadicalError(f"cannot combine sqrt({x.d}) with sqrt({y.d})")

    def is_rational(self) -> bool:
        return self.b == 0

    def conjugate(self) -> "Quad":
        return Quad(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        try:
            o = Quad._coerce(other)
        except TypeError:
            return NotImplemented
        d = Quad._field(self, o)
        return Quad(self.a + o.a, self.b + o.b, d)

    __radd__ = __add__

    def __neg__(self):
        return Quad(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            o = Quad._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        try:
            o = Quad._coerce(other)
        except TypeError:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        try:
            o = Quad._coerce(other)
        except TypeError:
            return NotImplemented
        d = Quad._field(self, o)
        return Quad(self.a * o.a + d * self.b * o.b, self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = Quad._coerce(other)
        except TypeError:
            return NotImplemented
        if o.a == 0 and o.b == 0:
            raise ZeroDivisionError("Quad division by zero")
        Quad._field(self, o)
        n = o.norm()
        c = o.conjugate()
        num = self * c
        return Quad(num.a / n, num.b / n, num.d)

    def __rtruediv__(self, other):
        try:
            o = Quad._coerce(other)
        except TypeError:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return Quad(1) / (self ** (-k))
        result = Quad(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- order ------------------------------------------------------------
    def sign(self) -> int:
        sa, sb = _sgn(self.a), _sgn(self.b)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb if sa == 0 else sa
        return sa if self.norm() > 0 else sb

    def _cmp(self, other) -> int:
        return (self - other).sign()

    def __eq__(self, other):
        if isinstance(other, Quad):
            return self.a == other.a and self.b == other.b and self.d == other.d
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __bool__(self):
        return not (self.a == 0 and self.b == 0)

    def __float__(self):
        return float(self.a) + float(self.b) * (self.d ** 0.5)

    def __repr__(self):
        return f"Quad({self.a!s}, {self.b!s}, {self.d})"

    def __str__(self):
        return format_scalar(self)


Scalar = Union[Fraction, Quad]


def scalar(x) -> Scalar:
    """Normalize ints, Fractions and Quads: rational values become Fractions."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Quad):
        return x.a if x.b == 0 else x
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact scalar: {x!r}")


def sign(x) -> int:
    """Exact sign of a Fraction, int or Quad."""
    if isinstance(x, Quad):
        return x.sign()
    return _sgn(x)


def quad_sign(x) -> int:
    return sign(x)


def radical_of(x) -> int:
    return x.d if isinstance(x, Quad) else 0


def to_float(x) -> float:
    return float(x)


def _format_rat(r: Fraction) -> str:
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def format_scalar(x) -> str:
    """Exact rendering: "p", "p/q", or "a+b*sqrt(d)" with rational parts."""
    x = scalar(x)
    if isinstance(x, Fraction):
        return _format_rat(x)
    if x.b == 1:
        rad = f"sqrt({x.d})"
    elif x.b == -1:
        rad = f"-sqrt({x.d})"
    else:
        rad = f"{_format_rat(x.b)}*sqrt({x.d})"
    if x.a == 0:
        return rad
    if rad.startswith("-"):
        return f"{_format_rat(x.a)}{rad}"
    return f"{_format_rat(x.a)}+{rad}"
