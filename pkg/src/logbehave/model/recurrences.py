"""Recurrence shapes.

Every sequence in the catalog is described by one of these frozen
dataclasses.  Terms are indexed from ``offset``; indices below the offset
read as zero, which is the convention several short recurrences rely on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

from ..exact import MPoly, PolyQ, RatFun, scalar


class ModelError(ValueError):
    """A recurrence or catalog request is malformed."""


def _scalars(xs) -> tuple:
    return tuple(scalar(x) for x in xs)


@dataclass(frozen=True)
class LinearRecurrence:
    """``Q(n) a(n) = sum_i rhs[i](n) * a(n-1-i)`` for ``n >= valid_from``.

    ``rhs[0]`` multiplies a(n-1); zero polynomials are allowed so that lags
    can be skipped.
    """

    name: str
    lhs: PolyQ
    rhs: Tuple[PolyQ, ...]
    valid_from: int
    initial_terms: tuple
    offset: int = 0

    def __post_init__(self):
        object.__setattr__(self, "rhs", tuple(self.rhs))
        object.__setattr__(self, "initial_terms", _scalars(self.initial_terms))
        if self.lhs.is_zero():
            raise ModelError(f"{self.name}: Q(n) is the zero polynomial")
        if not self.rhs:
            raise ModelError(f"{self.name}: recurrence needs at least one lag")
        if self.valid_from > self.offset + len(self.initial_terms):
            raise ModelError(
                f"{self.name}: initial terms stop at index "
                f"{self.offset + len(self.initial_terms) - 1} but the recurrence starts at {self.valid_from}"
            )
        # lags that reach below the offset read as zero, so only the count
        # relative to valid_from matters
        need = min(len(self.rhs), self.valid_from - self.offset)
        if need > len(self.initial_terms):
            raise ModelError(f"{self.name}: not enough initial terms")

    @property
    def order(self) -> int:
        return len(self.rhs)

    @property
    def degree_d(self) -> int:
        """The d of the P_d..P_0 labelling (number of lags minus one)."""
        return len(self.rhs) - 1


@dataclass(frozen=True)
class ConvolutionRecurrence:
    """``S(n+1) = S(n) + sum_{m=l}^{n-1+s} S(m) S(n-m-1+s)`` for ``n >= l+1``.

    ``s = span_shift`` is 0 for secondary structures and 1 for the big
    Schroeder convolution.  For l = -1 the out-of-range value S(-1) is 1.
    """

    name: str
    rank: int
    initial_terms: tuple
    span_shift: int = 0

    def __post_init__(self):
        object.__setattr__(self, "initial_terms", _scalars(self.initial_terms))
        if self.rank < -1:
            raise ModelError("rank must be >= -1")
        if len(self.initial_terms) != self.rank + 2:
            raise ModelError(
                f"{self.name}: expected {self.rank + 2} initial terms, got {len(self.initial_terms)}"
            )
        if any(t <= 0 for t in self.initial_terms):
            raise ModelError(f"{self.name}: initial terms must be positive")

    @property
    def offset(self) -> int:
        return 0


@dataclass(frozen=True)
class NonhomRecurrence:
    """``a(n) = R a(n-1) + S`` or, with T given, ``a(n) = R a(n-1) + S a(n-2) + T``."""

    name: str
    R: RatFun
    S: RatFun
    T: Optional[RatFun]
    initial_terms: tuple
    valid_from: int
    offset: int = 0

    def __post_init__(self):
        object.__setattr__(self, "initial_terms", _scalars(self.initial_terms))
        for label in ("R", "S", "T"):
            v = getattr(self, label)
            if v is not None and not isinstance(v, RatFun):
                object.__setattr__(self, label, RatFun._lift(v))
        if self.S.is_zero():
            raise ModelError(f"{self.name}: S must not vanish identically")
        lags = 1 if self.T is None else 2
        if self.valid_from - self.offset < lags or self.valid_from > self.offset + len(self.initial_terms):
            raise ModelError(f"{self.name}: initial terms do not match valid_from")

    @property
    def second_order(self) -> bool:
        return self.T is not None


@dataclass(frozen=True)
class Boundary:
    """a(0, k) = corner if k == 0 else 0; a(n, k) = 0 for k < 0.

    ``column`` overrides a(n, 0) for n >= 1 when given; otherwise the
    recurrence computes it (with the zero extension at k = -1).
    """

    corner: Fraction = Fraction(1)
    column: Optional[Fraction] = None


@dataclass(frozen=True)
class TwoIndexRecurrence:
    """``a(n, k) = R(n, k) a(n-1, k-1) + S(n, k) a(n-1, k)`` for n >= 1.

    R and S are polynomials in (n, k).
    """

    name: str
    R: MPoly
    S: MPoly
    boundary: Boundary = field(default_factory=Boundary)

    def __post_init__(self):
        if self.R.nvars != 2 or self.S.nvars != 2:
            raise ModelError("two-index coefficients must be polynomials in (n, k)")


@dataclass(frozen=True)
class BenderCanfieldDefinition:
    """b_n = n! [x^n] exp(sum_k a_k x^k / w_k).

    ``form="factorial"`` uses w_k = k!, ``form="bc"`` uses w_k = k.
    ``coefficients`` lists a_1, a_2, ...; ``tail`` (if given) repeats
    forever after the listed prefix, otherwise the prefix is zero-extended.
    """

    name: str
    coefficients: tuple
    form: str = "factorial"
    tail: Optional[Fraction] = None

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(Fraction(c) for c in self.coefficients))
        if self.tail is not None:
            object.__setattr__(self, "tail", Fraction(self.tail))
        if self.form not in ("factorial", "bc"):
            raise ModelError(f"unknown transform form {self.form!r}")

    @property
    def offset(self) -> int:
        return 0

    def a(self, count: int) -> list:
        """a_1..a_count."""
        out = list(self.coefficients[:count])
        fill = self.tail if self.tail is not None else Fraction(0)
        out += [fill] * (count - len(out))
        return out


@dataclass(frozen=True)
class QuotientRecurrence:
    """``q(n) = sum_i coeffs[i](n) / (q(n-1) ... q(n-i))`` for n >= valid_from."""

    coeffs: Tuple[RatFun, ...]
    valid_from: int

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def rhs(self, n, qs) -> object:
        """Evaluate the right-hand side at n with qs[j-1] = q(n-j)."""
        total = Fraction(0)
        prod = Fraction(1)
        for i, c in enumerate(self.coeffs):
            if i:
                prod = prod * qs[i - 1]
            if c.is_zero():
                continue
            total = total + c(n) / prod
        return scalar(total)

    def to_str(self, var: str = "n") -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            den = "*".join(f"q({var}-{j})" for j in range(1, i + 1))
            parts.append(f"[{c.to_str(var)}]" + (f"/({den})" if den else ""))
        return " + ".join(parts) if parts else "0"
