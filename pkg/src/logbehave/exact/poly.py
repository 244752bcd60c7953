"""Dense univariate polynomials with exact Fraction/Quad coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .quad import Quad, MixedRadicalError, format_scalar, radical_of, scalar, sign

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _inv(c):
    return scalar(_ONE / c) if not isinstance(c, Quad) else scalar(Quad(1) / c)


def _trim(coeffs: list) -> tuple:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class PolyQ:
    """Polynomial ``sum(c[i] * x**i)``; coefficient list is indexed by power.

    Instances are immutable and hashable.  The zero polynomial has an empty
    coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs", "_d")

    def __init__(self, coeffs: Iterable = ()):
        cs = _trim([scalar(c) for c in coeffs])
        d = 0
        for c in cs:
            r = radical_of(c)
            if r:
                if d and r != d:
                    raise MixedRadicalError(f"coefficients mix sqrt({d}) and sqrt({r})")
                d = r
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "_d", d)

    def __setattr__(self, name, value):
        raise AttributeError("PolyQ is immutable")

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, c) -> "PolyQ":
        return cls([c])

    @classmethod
    def x(cls) -> "PolyQ":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Sequence, lead=1) -> "PolyQ":
        p = cls([lead])
        for r in roots:
            p = p * cls([-scalar(r), 1])
        return p

    # -- basic properties -------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def radical(self) -> int:
        """The d of the quadratic field the coefficients live in (0 for Q)."""
        return self._d

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def lead(self):
        return self.coeffs[-1] if self.coeffs else _ZERO

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else _ZERO

    def __eq__(self, other):
        if isinstance(other, PolyQ):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, Quad)):
            return self.coeffs == PolyQ.const(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _lift(other) -> "PolyQ":
        if isinstance(other, PolyQ):
            return other
        return PolyQ.const(other)

    def __add__(self, other):
        if not isinstance(other, (PolyQ, int, Fraction, Quad)):
            return NotImplemented
        o = PolyQ._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return PolyQ([self.coeff(i) + o.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return PolyQ([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, (PolyQ, int, Fraction, Quad)):
            return NotImplemented
        return self + (-PolyQ._lift(other))

    def __rsub__(self, other):
        return PolyQ._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Quad)):
            c = scalar(other)
            return PolyQ([c * a for a in self.coeffs])
        if not isinstance(other, PolyQ):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return PolyQ()
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return PolyQ(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = PolyQ([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, other: "PolyQ"):
        """Euclidean division over the coefficient field."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead_inv = _inv(other.lead())
        if len(rem) - 1 < dq:
            return PolyQ(), self
        quot = [_ZERO] * (len(rem) - dq)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            f = scalar(c * lead_inv)
            quot[i - dq] = f
            for j, b in enumerate(other.coeffs):
                rem[i - dq + j] = rem[i - dq + j] - f * b
        return PolyQ(quot), PolyQ(rem[:dq])

    def __floordiv__(self, other):
        return self.divmod(PolyQ._lift(other))[0]

    def __mod__(self, other):
        return self.divmod(PolyQ._lift(other))[1]

    def monic(self) -> "PolyQ":
        if self.is_zero():
            return self
        return self * _inv(self.lead())

    def gcd(self, other: "PolyQ") -> "PolyQ":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1].monic()
        return a.monic()

    # -- calculus and substitution ----------------------------------------
    def derivative(self) -> "PolyQ":
        return PolyQ([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return scalar(acc)

    def eval(self, x):
        return self(x)

    def shift(self, c) -> "PolyQ":
        """Return q with q(x) = p(x + c), by Horner-style Taylor shift."""
        c = scalar(c)
        out = PolyQ()
        lin = PolyQ([c, 1])
        for coef in reversed(self.coeffs):
            out = out * lin + coef
        return out

    def compose(self, other: "PolyQ") -> "PolyQ":
        out = PolyQ()
        for coef in reversed(self.coeffs):
            out = out * other + coef
        return out

    def scale(self, c) -> "PolyQ":
        """Return q with q(x) = p(c*x)."""
        c = scalar(c)
        out, pw = [], _ONE
        for coef in self.coeffs:
            out.append(coef * pw)
            pw = pw * c
        return PolyQ(out)

    def content_sign(self) -> int:
        return sign(self.lead())

    def coefficient_signs(self) -> list:
        return [sign(c) for c in self.coeffs]

    # -- rendering --------------------------------------------------------
    def to_str(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if isinstance(c, Quad):
                body = f"({format_scalar(c)})"
                term = body if not mono else f"{body}*{mono}"
                parts.append(("+", term))
                continue
            s = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if mono and mag == 1:
                term = mono
            elif mono:
                term = f"{format_scalar(mag)}*{mono}"
            else:
                term = format_scalar(mag)
            parts.append((s, term))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for s, t in parts[1:]:
            out += f" {s} {t}"
        return out

    def __repr__(self):
        return f"PolyQ({self.to_str()})"

    def __str__(self):
        return self.to_str()


def poly_shift(p: PolyQ, c) -> PolyQ:
    return p.shift(c)


X = PolyQ.x()
