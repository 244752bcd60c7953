"""Sparse multivariate polynomials over Q, used by the two-index checks."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Dict, Tuple

from .quad import scalar, sign

Exps = Tuple[int, ...]


class MPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Dict[Exps, object] | None = None):
        clean = {}
        for e, c in (terms or {}).items():
            if len(e) != nvars:
                raise ValueError(f"exponent {e} does not have {nvars} entries")
            c = scalar(c)
            if c != 0:
                clean[tuple(e)] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MPoly is immutable")

    @classmethod
    def const(cls, nvars: int, c) -> "MPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int) -> "MPoly":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(self.nvars, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def _lift(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable counts differ")
            return other
        return MPoly.const(self.nvars, other)

    def __add__(self, other):
        o = self._lift(other)
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, 0) + c
        return MPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        out: Dict[Exps, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = MPoly.const(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, *xs):
        if len(xs) != self.nvars:
            raise ValueError(f"expected {self.nvars} arguments")
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(xs, e):
                v = v * x ** k
            total = total + v
        return scalar(total)

    def diff(self, i: int) -> "MPoly":
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = c * e[i]
        return MPoly(self.nvars, out)

    def shift(self, offsets) -> "MPoly":
        """Substitute x_i -> x_i + offsets[i]."""
        out: Dict[Exps, object] = {}
        for e, c in self.terms.items():
            acc = {(): scalar(c)}
            for i, k in enumerate(e):
                nxt = {}
                for pre, v in acc.items():
                    for j in range(k + 1):
                        w = v * comb(k, j) * scalar(offsets[i]) ** (k - j)
                        key = pre + (j,)
                        nxt[key] = nxt.get(key, 0) + w
                acc = nxt
            for key, v in acc.items():
                out[key] = out.get(key, 0) + v
        return MPoly(self.nvars, out)

    def coefficient_signs(self) -> set:
        return {sign(c) for c in self.terms.values()}

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def __repr__(self):
        if not self.terms:
            return "MPoly(0)"
        names = "nkyzuvw"
        parts = []
        for e in sorted(self.terms, reverse=True):
            mono = "*".join(
                (names[i] if k == 1 else f"{names[i]}^{k}") for i, k in enumerate(e) if k
            )
            c = self.terms[e]
            parts.append(f"{c}" + (f"*{mono}" if mono else ""))
        return "MPoly(" + " + ".join(parts) + ")"


def orthant_sign(p: MPoly, corner) -> int:
    """+1 (-1) if p shifted to ``corner`` has only nonnegative (nonpositive)
    coefficients, so p keeps that weak sign on the whole orthant above the
    corner; 0 when neither holds.
    """
    s = p.shift(corner).coefficient_signs()
    if not s or s <= {0, 1}:
        return 1
    if s <= {0, -1}:
        return -1
    return 0
