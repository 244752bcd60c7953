"""Deciding polynomial positivity on a ray [n0, oo).

The procedure is deliberately simple and never claims more than it shows:

1. scan the integer points n0, n0+1, ..., n0+max_shift for a counterexample;
2. for t = 0, 1, ..., max_shift, look at p(x + n0 + t); if every coefficient
   is nonnegative with a positive leading one, p is nonnegative on
   [n0 + t, oo);
3. for real-domain queries the gap [n0, n0 + t] is then certified by a
   Moebius transform onto [0, oo) with bisection on failure.

Anything not settled by these steps is Inconclusive.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .poly import PolyQ
from .quad import scalar, sign
from .ratfun import RatFun

DEFAULT_MAX_SHIFT = 64
_BISECT_DEPTH = 16


class Status(enum.Enum):
    PROVED = "Proved"
    DISPROVED = "Disproved"
    INCONCLUSIVE = "Inconclusive"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class RayVerdict:
    status: Status
    witness: Optional[Fraction] = None
    shift_used: Optional[int] = None
    reduced: PolyQ = field(default_factory=PolyQ)
    note: str = ""

    @property
    def proved(self) -> bool:
        return self.status is Status.PROVED


def _bad(v, strict: bool) -> bool:
    s = sign(v)
    return s < 0 or (strict and s == 0)


def _shift_ok(q: PolyQ, strict: bool) -> bool:
    if q.is_zero():
        return not strict
    if sign(q.lead()) <= 0:
        return False
    if any(sign(c) < 0 for c in q.coeffs):
        return False
    if strict and sign(q.coeff(0)) <= 0:
        return False
    return True


def _interval_cert(p: PolyQ, a: Fraction, b: Fraction, strict: bool) -> bool:
    """Sufficient test for p >= 0 (or > 0) on [a, b] via x = (a + b*y)/(1 + y)."""
    deg = p.degree
    one_y = PolyQ([1, 1])
    lin = PolyQ([a, b])
    g = PolyQ()
    for i, c in enumerate(p.coeffs):
        if c != 0:
            g = g + (lin ** i) * (one_y ** (deg - i)) * c
    if not _shift_ok(g, strict):
        return False
    if strict and (_bad(p(a), True) or _bad(p(b), True)):
        return False
    return True


def _certify_gap(p: PolyQ, a: Fraction, b: Fraction, strict: bool):
    """Return (ok, witness).  ok is None when undecided within the depth limit."""
    stack = [(a, b, 0)]
    while stack:
        lo, hi, depth = stack.pop()
        if _interval_cert(p, lo, hi, strict):
            continue
        mid = (lo + hi) / 2
        if _bad(p(mid), strict):
            return False, mid
        if depth >= _BISECT_DEPTH:
            return None, None
        stack.append((mid, hi, depth + 1))
        stack.append((lo, mid, depth + 1))
    return True, None


def ray_positive(
    p: PolyQ,
    n0,
    strict: bool = False,
    max_shift: int = DEFAULT_MAX_SHIFT,
    domain: str = "real",
) -> RayVerdict:
    """Try to prove p(x) >= 0 (> 0 if strict) for all x >= n0.

    ``domain="integer"`` restricts the claim to integers x >= n0, in which
    case the counterexample scan already covers the points below the
    accepted shift.
    """
    if max_shift < 0:
        raise ValueError("max_shift must be nonnegative")
    if domain not in ("real", "integer"):
        raise ValueError(f"unknown domain {domain!r}")
    if not isinstance(p, PolyQ):
        p = PolyQ.const(p)
    if p.is_zero():
        if strict:
            raise ValueError("zero polynomial cannot be strictly positive")
        return RayVerdict(Status.PROVED, shift_used=0, reduced=p)
    n0 = scalar(n0)
    for i in range(max_shift + 1):
        x = n0 + i
        if _bad(p(x), strict):
            return RayVerdict(Status.DISPROVED, witness=x, reduced=p.shift(x))
    last = p
    for t in range(max_shift + 1):
        q = p.shift(n0 + t)
        last = q
        if not _shift_ok(q, strict):
            continue
        if t == 0 or domain == "integer":
            return RayVerdict(Status.PROVED, shift_used=t, reduced=q)
        ok, wit = _certify_gap(p, n0, n0 + t, strict)
        if ok:
            return RayVerdict(Status.PROVED, shift_used=t, reduced=q)
        if ok is False:
            return RayVerdict(Status.DISPROVED, witness=wit, reduced=q)
        return RayVerdict(
            Status.INCONCLUSIVE, reduced=q,
            note=f"shift {t} works but the gap [{n0}, {n0 + t}] was not certified",
        )
    note = f"no shift up to {max_shift} has nonnegative coefficients"
    if p.radical == 0:
        roots = sturm_root_count(p, n0, None)
        note += f"; {roots} real root(s) in ({n0}, oo)"
    return RayVerdict(Status.INCONCLUSIVE, reduced=last, note=note)


def ratfun_ray_positive(
    r: RatFun,
    n0,
    strict: bool = False,
    max_shift: int = DEFAULT_MAX_SHIFT,
    domain: str = "real",
) -> RayVerdict:
    """Sign query for a rational function: the denominator must be shown > 0 first."""
    if not isinstance(r, RatFun):
        r = RatFun(r)
    dv = ray_positive(r.den, n0, strict=True, max_shift=max_shift, domain=domain)
    if not dv.proved:
        return RayVerdict(
            Status.INCONCLUSIVE, reduced=r.num,
            note="denominator not shown positive on the ray",
        )
    if r.num.is_zero():
        if strict:
            return RayVerdict(Status.DISPROVED, witness=scalar(n0), reduced=r.num)
        return RayVerdict(Status.PROVED, shift_used=0, reduced=r.num)
    return ray_positive(r.num, n0, strict=strict, max_shift=max_shift, domain=domain)


# -- Sturm sequences --------------------------------------------------------

def sturm_sequence(p: PolyQ) -> list:
    if p.radical != 0:
        raise ValueError("Sturm sequences are only supported over Q")
    if p.is_zero():
        raise ValueError("zero polynomial has no Sturm sequence")
    g = p.gcd(p.derivative()) if p.degree > 0 else PolyQ([1])
    p0 = p // g if not g.is_constant() else p
    seq = [p0, p0.derivative()]
    while not seq[-1].is_zero():
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append(-r)
    return [s for s in seq if not s.is_zero()]


def _variations(signs) -> int:
    nz = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def _signs_at(seq, x) -> list:
    if x is None:
        return [sign(s.lead()) for s in seq]
    return [sign(s(x)) for s in seq]


def sturm_root_count(p: PolyQ, lo, hi=None) -> int:
    """Number of distinct real roots of p in (lo, hi]; hi=None means +oo."""
    if p.radical != 0:
        raise ValueError("Sturm root counting requires rational coefficients")
    lo = scalar(lo)
    if hi is not None:
        hi = scalar(hi)
        if not lo < hi:
            raise ValueError("need lo < hi")
    seq = sturm_sequence(p)
    return _variations(_signs_at(seq, lo)) - _variations(_signs_at(seq, hi))
