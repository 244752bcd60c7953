"""Sufficient derivative-sign conditions for a continuous extension of q(n).

The checks never build the continuous extension f.  Each one reduces the
induction to three kinds of exact evidence: ray-positivity of the
coefficient conditions on [n0, oo), propagation of the a priori bounds
m <= f <= M, and monotonicity of the exact quotients on a base prefix.
All derivatives are exact rational-function derivatives.
"""

from __future__ import annotations

from dataclasses import replace
from math import ceil
from typing import List, Optional, Tuple

from ..engine import eval_upto, quotients
from ..exact import PolyQ, RatFun, RayVerdict, Status, format_scalar, ratfun_ray_positive
from ..model import quotient_form
from ..model.recurrences import LinearRecurrence
from ..sandwich.types import BaseCheck
from .types import (
    DECREASING,
    INCREASING,
    CalculusConditionSet,
    CalculusError,
    CalculusReport,
    DecompTerm,
    TermDecomposition,
)

Conditions = List[Tuple[str, RayVerdict]]

RADICAL_CHECK_HI = 1000


# -- helpers ---------------------------------------------------------------

def _query(r: RatFun, start, c: CalculusConditionSet, strict: bool = False) -> RayVerdict:
    return ratfun_ray_positive(r, start, strict=strict, max_shift=c.max_shift)


def _inconclusive(note: str) -> RayVerdict:
    return RayVerdict(Status.INCONCLUSIVE, note=note)


def _one_sign(r: RatFun, start, c: CalculusConditionSet) -> Optional[int]:
    """+1 / -1 when r is shown >= 0 / <= 0 on the ray, 0 when r vanishes, else None."""
    if r.is_zero():
        return 0
    if _query(r, start, c).proved:
        return 1
    if _query(-r, start, c).proved:
        return -1
    return None


def _lagged_product(b: RatFun, k: int) -> RatFun:
    out = RatFun(1)
    for j in range(1, k + 1):
        out = out * b.shift(-j)
    return out


def _start(c: CalculusConditionSet) -> int:
    return ceil(c.n0)


def _quotients(c: CalculusConditionSet, hi: int):
    return quotients(eval_upto(c.sequence, hi))


def _combine(conds: Conditions, base, refute: bool = True, has_sequence: bool = True) -> Status:
    if any(not b.ok for b in base):
        return Status.DISPROVED
    states = [v.status for _, v in conds]
    if Status.DISPROVED in states:
        return Status.DISPROVED if refute else Status.INCONCLUSIVE
    if Status.INCONCLUSIVE in states or not has_sequence:
        return Status.INCONCLUSIVE
    return Status.PROVED


def _base_prefix(c: CalculusConditionSet):
    """Exact monotonicity q(n) vs q(n+1) on [base_check_lo, base_check_hi]."""
    if c.sequence is None:
        return (), ("no sequence supplied; base prefix not checked",)
    hi = c.base_check_hi if c.base_check_hi is not None else _start(c) + 4
    qs = _quotients(c, hi)
    lo = qs.origin_index if c.base_check_lo is None else max(c.base_check_lo, qs.origin_index)
    out = []
    for n in range(lo, hi):
        a, b = qs[n], qs[n + 1]
        ok = a <= b if c.direction == INCREASING else a >= b
        out.append(BaseCheck(n, "monotone", ok, f"q({n}) = {format_scalar(a)}, q({n + 1}) = {format_scalar(b)}"))
    return tuple(out), ()


def _report(c, method, conds, base, key, notes=(), refute=True) -> CalculusReport:
    status = _combine(conds, base, refute, c.sequence is not None)
    return CalculusReport(c.name, method, status, tuple(conds), key if key is not None else PolyQ(),
                          tuple(base), tuple(notes))


# -- a priori bounds -------------------------------------------------------

def _estimates(coeffs, signs, c: CalculusConditionSet) -> Tuple[RatFun, RatFun]:
    """Lower and upper estimates of sum_i c_i/(f1...fi) over m_j <= f_j <= M_j.

    A missing M acts as +oo, so the term it would bound contributes 0.
    """
    lower = upper = coeffs[0]
    for i in range(1, len(coeffs)):
        ci, s = coeffs[i], signs[i]
        if s == 0:
            continue
        small = _lagged_product(c.m, i)
        big = _lagged_product(c.M, i) if c.M is not None else None
        if s > 0:
            upper = upper + ci / small
            if big is not None:
                lower = lower + ci / big
        else:
            lower = lower + ci / small
            if big is not None:
                upper = upper + ci / big
    return lower, upper


def _bounds(c: CalculusConditionSet, coeffs=None):
    """Conditions and base checks for m <= f <= M propagating through the recurrence."""
    if c.m is None:
        raise CalculusError("radical lower bounds are only handled by wronskian_conditions")
    coeffs = tuple(coeffs if coeffs is not None else c.coeffs)
    order = len(coeffs) - 1
    conds: Conditions = [("m > 0", _query(c.m, c.n0, c, strict=True))]
    if c.M is not None:
        conds.append(("M - m >= 0", _query(c.M - c.m, c.n0, c)))
    signs = [1]
    for i in range(1, len(coeffs)):
        s = _one_sign(coeffs[i], c.n0, c)
        if s is None:
            conds.append((f"coefficient {i} one-signed",
                          _inconclusive("sign-indefinite on the ray, so f is not monotone in the lags")))
            return conds, (), None
        signs.append(s)
    lower, upper = _estimates(coeffs, signs, c)
    lo_expr = lower - c.m
    hi_expr = c.M - upper if c.M is not None else None
    t = _start(c) + order
    limit = t + c.max_shift
    while True:
        vl = _query(lo_expr, t, c)
        vu = _query(hi_expr, t, c) if hi_expr is not None else None
        pending = [v for v in (vl, vu) if v is not None and not v.proved]
        if not pending:
            break
        w = max((v.witness for v in pending if v.status is Status.DISPROVED), default=None)
        if w is None or ceil(w) + 1 > limit:
            break
        t = max(t + 1, ceil(w) + 1)
    conds.append((f"lower bound propagates on [{t}, oo)", vl))
    if vu is not None:
        conds.append((f"upper bound propagates on [{t}, oo)", vu))
    base = []
    if c.sequence is not None:
        qs = _quotients(c, t)
        for n in range(_start(c), t):
            if n < qs.origin_index:
                raise CalculusError(f"q({n}) is not defined; raise n0")
            v = qs[n]
            ok = c.m(n) <= v and (c.M is None or v <= c.M(n))
            base.append(BaseCheck(n, "bounds", ok, f"q({n}) = {format_scalar(v)}"))
            if not ok:
                break
    return conds, tuple(base), (lower, upper)


def check_bounds_invariant(c: CalculusConditionSet) -> CalculusReport:
    """Inductive step m1 <= f1 <= M1 => m <= R + S/f1 <= M plus exact base values."""
    conds, base, _ = _bounds(c)
    notes = () if c.sequence is not None else ("no sequence supplied; base values not checked",)
    return _report(c, "bounds", conds, base, None, notes)


# -- two-term conditions ---------------------------------------------------

def _two_term(c: CalculusConditionSet, what: str) -> None:
    if c.T is not None:
        raise CalculusError(f"{what} needs a two-term recurrence f = R + S/f1")
    if c.m is None:
        raise CalculusError(f"{what} needs a rational lower bound m")


def check_thm41(c: CalculusConditionSet) -> CalculusReport:
    """Case S <= 0: R' >= 0, R' m1 + S' >= 0 (mirrored with <= for decreasing)."""
    _two_term(c, "check_thm41")
    Rp, Sp = c.R.derivative(), c.S.derivative()
    middle = Rp * c.m.shift(-1) + Sp
    s = c.sign
    rel = ">=" if s > 0 else "<="
    conds: Conditions = [
        (f"R' {rel} 0", _query(Rp * s, c.n0, c)),
        (f"R'*m1 + S' {rel} 0", _query(middle * s, c.n0, c)),
        ("S <= 0", _query(-c.S, c.n0, c)),
    ]
    bconds, bbase, _ = _bounds(c)
    prefix, notes = _base_prefix(c)
    return _report(c, "thm41", conds + bconds, bbase + prefix, middle.num, notes)


def thm42_key(c: CalculusConditionSet) -> RatFun:
    """m1 m2 (R' m1 + S') - S (R1' M2 + S1')."""
    Rp, Sp = c.R.derivative(), c.S.derivative()
    m1, m2 = c.m.shift(-1), c.m.shift(-2)
    M2 = c.M.shift(-2)
    return m1 * m2 * (Rp * m1 + Sp) - c.S * (Rp.shift(-1) * M2 + Sp.shift(-1))


def check_thm42(c: CalculusConditionSet) -> CalculusReport:
    """Case S >= 0: R', S' one-signed with the direction and the bounded key condition."""
    _two_term(c, "check_thm42")
    if c.M is None:
        raise CalculusError("check_thm42 needs an upper bound M")
    Rp, Sp = c.R.derivative(), c.S.derivative()
    key = thm42_key(c)
    s = c.sign
    rel = ">=" if s > 0 else "<="
    conds: Conditions = [
        (f"R' {rel} 0", _query(Rp * s, c.n0, c)),
        (f"S' {rel} 0", _query(Sp * s, c.n0, c)),
        ("S >= 0", _query(c.S, c.n0, c)),
        (f"m1*m2*(R'*m1 + S') - S*(R1'*M2 + S1') {rel} 0", _query(key * s, c.n0, c)),
    ]
    bconds, bbase, _ = _bounds(c)
    prefix, notes = _base_prefix(c)
    return _report(c, "thm42", conds + bconds, bbase + prefix, key.num, notes)


# -- three-term condition --------------------------------------------------

def _F(c: CalculusConditionSet, lag: int, f1: RatFun, f2: RatFun) -> RatFun:
    """R'(x-lag) f1 f2 + S'(x-lag) f2 + T'(x-lag), the f-free part of f' f1 f2."""
    Rp, Sp, Tp = (g.derivative().shift(-lag) for g in (c.R, c.S, c.T))
    return Rp * f1 * f2 + Sp * f2 + Tp


def threeterm_key(c: CalculusConditionSet) -> RatFun:
    """m1 m2 m3 m4 F(m1, m2) - (S M2 + T) M4 F1(M2, M3) - T M1 F2(M3, M4)."""
    m = [c.m.shift(-j) for j in range(5)]
    M = [c.M.shift(-j) for j in range(5)]
    lhs = m[1] * m[2] * m[3] * m[4] * _F(c, 0, m[1], m[2])
    rhs = (c.S * M[2] + c.T) * M[4] * _F(c, 1, M[2], M[3]) + c.T * M[1] * _F(c, 2, M[3], M[4])
    return lhs - rhs


def check_threeterm(c: CalculusConditionSet) -> CalculusReport:
    """f = R + S/f1 + T/(f1 f2) with R, S, T and their derivatives nonnegative."""
    if c.T is None:
        raise CalculusError("check_threeterm needs the coefficient T")
    if c.extra:
        raise CalculusError(
            f"recurrence of quotient order {len(c.coeffs) - 1} is beyond the three-term check; "
            "use wronskian_conditions"
        )
    if c.T.is_zero():
        rep = check_thm42(replace(c, T=None))
        return replace(rep, method="threeterm", notes=rep.notes + ("T = 0: reduced to the two-term check",))
    if c.direction != INCREASING:
        raise CalculusError("the three-term check is stated for the increasing direction")
    if c.m is None or c.M is None:
        raise CalculusError("check_threeterm needs rational bounds m and M")
    conds: Conditions = []
    for label, g in (("R", c.R), ("S", c.S), ("T", c.T)):
        conds.append((f"{label} >= 0", _query(g, c.n0, c)))
    for label, g in (("R'", c.R), ("S'", c.S), ("T'", c.T)):
        conds.append((f"{label} >= 0", _query(g.derivative(), c.n0, c)))
    key = threeterm_key(c)
    conds.append(("m^4 F - (M S + T) M F1 - M T F2 >= 0", _query(key, c.n0, c)))
    bconds, bbase, _ = _bounds(c)
    prefix, notes = _base_prefix(c)
    return _report(c, "threeterm", conds + bconds, bbase + prefix, key.num, notes)


# -- term decompositions ---------------------------------------------------

def standard_decomposition(c: CalculusConditionSet) -> TermDecomposition:
    """f' = (R' f1 + S')/f1 - S f1'/f1^2."""
    return TermDecomposition(f"{c.name}: generic", (
        DecompTerm(RatFun(1), c.R.derivative(), c.S.derivative(), power=-1),
        DecompTerm(-c.S, RatFun(0), RatFun(1), derivative=True, power=-2),
    ))


def _collect(terms) -> dict:
    out: dict = {}
    for t in terms:
        for power, part in ((t.power + 1, t.u), (t.power, t.v)):
            k = (t.derivative, power)
            out[k] = out.get(k, RatFun(0)) + t.coeff * part
    return {k: v for k, v in out.items() if not v.is_zero()}


def decomposition_matches(dec: TermDecomposition, c: CalculusConditionSet) -> bool:
    """Identity check against the generic derivative of f = R + S/f1."""
    if any(t.lag != 1 for t in dec.terms):
        return False
    return _collect(dec.terms) == _collect(standard_decomposition(c).terms)


def _bracket_sign(t: DecompTerm, c: CalculusConditionSet):
    """Sign of u f_lag + v over m_lag <= f_lag <= M_lag, with the endpoint verdicts."""
    if t.u.is_zero():
        s = _one_sign(t.v, c.n0, c)
        return s, []
    lo = t.u * c.m.shift(-t.lag) + t.v
    hi = t.u * c.M.shift(-t.lag) + t.v if c.M is not None else t.u
    for s in (1, -1):
        vs = [_query(lo * s, c.n0, c), _query(hi * s, c.n0, c)]
        if all(v.proved for v in vs):
            return s, vs
    return None, []


def check_decomposition(dec: TermDecomposition, c: CalculusConditionSet) -> CalculusReport:
    """Sign every term of a validated decomposition of f' under the bounds."""
    _two_term(c, "check_decomposition")
    if not decomposition_matches(dec, c):
        raise CalculusError(f"{dec.name}: decomposition does not equal the derivative of R + S/f1")
    conds: Conditions = []
    key = None
    for i, t in enumerate(dec.terms, 1):
        sb, _ = _bracket_sign(t, c)
        if sb is None:
            conds.append((f"term {i} bracket one-signed",
                          _inconclusive("bracket changes sign between the bounds")))
            continue
        if sb == 0 or t.coeff.is_zero():
            conds.append((f"term {i} vanishes", RayVerdict(Status.PROVED, shift_used=0)))
            continue
        want = c.sign * sb * (c.sign if t.derivative else 1)
        rel = ">=" if want > 0 else "<="
        conds.append((f"term {i} coefficient {rel} 0 (bracket {'>=' if sb > 0 else '<='} 0)",
                      _query(t.coeff * want, c.n0, c)))
        key = t.coeff.num
    bconds, bbase, _ = _bounds(c)
    prefix, notes = _base_prefix(c)
    return _report(c, "decomposition", conds + bconds, bbase + prefix, key, notes)


def gegenbauer_decomposition(nu, t) -> TermDecomposition:
    """2(1-nu)/(x^2 f1) [t f1 - 1] + (1 + 2(nu-1)/x) f1'/f1^2."""
    x = RatFun.x()
    return TermDecomposition(f"gegenbauer(nu={nu},t={t})", (
        DecompTerm(2 * (1 - RatFun(nu)) / (x * x), RatFun(t), RatFun(-1), power=-1),
        DecompTerm(1 + 2 * (RatFun(nu) - 1) / x, RatFun(0), RatFun(1), derivative=True, power=-2),
    ))


def gegenbauer_deriv_decomposition(nu, t) -> TermDecomposition:
    """2 nu/((x-1)^2 f1) [1 - t f1] + (1 + 2 nu/(x-1)) f1'/f1^2."""
    x1 = RatFun.x() - 1
    return TermDecomposition(f"gegenbauer_deriv(nu={nu},t={t})", (
        DecompTerm(2 * RatFun(nu) / (x1 * x1), RatFun(-t), RatFun(1), power=-1),
        DecompTerm(1 + 2 * RatFun(nu) / x1, RatFun(0), RatFun(1), derivative=True, power=-2),
    ))


def laguerre_decomposition(t) -> TermDecomposition:
    """1/(x^2 f1) [(1+t) f1 - 1] + (1 - 1/x) f1'/f1^2."""
    x = RatFun.x()
    return TermDecomposition(f"laguerre(t={t})", (
        DecompTerm(1 / (x * x), RatFun(1) + t, RatFun(-1), power=-1),
        DecompTerm(1 - 1 / x, RatFun(0), RatFun(1), derivative=True, power=-2),
    ))


# -- general Wronskian form ------------------------------------------------

def wronskians(rec: LinearRecurrence) -> Tuple[PolyQ, ...]:
    """W_i = Q P_i' - Q' P_i for i = 0..d, where P_i multiplies a(n-(d+1-i))."""
    Q = rec.lhs
    d = rec.degree_d
    return tuple(Q * rec.rhs[d - i].derivative() - Q.derivative() * rec.rhs[d - i] for i in range(d + 1))


def from_recurrence(rec: LinearRecurrence, name: str | None = None, **kw) -> CalculusConditionSet:
    """Condition set whose coefficient functions come from the quotient form of rec."""
    cs = quotient_form(rec).coeffs
    R = cs[0]
    S = cs[1] if len(cs) > 1 else RatFun(0)
    T = cs[2] if len(cs) > 2 else None
    return CalculusConditionSet(name or rec.name, R, S, T=T, extra=tuple(cs[3:]), sequence=rec, **kw)


def _radical_base(c: CalculusConditionSet, hi: int):
    qs = _quotients(c, hi)
    out = []
    for n in range(max(_start(c), qs.origin_index), hi + 1):
        v = qs[n]
        ok = v > 0 and v * v >= c.m_squared(n) and (c.M is None or v <= c.M(n))
        if not ok:
            out.append(BaseCheck(n, "radical bound", False, f"q({n}) = {format_scalar(v)}"))
    if not out:
        out.append(BaseCheck(hi, "radical bound", True,
                             f"q(n)^2 >= {c.m_squared.to_str('n')} for {_start(c)} <= n <= {hi}"))
    return tuple(out)


def wronskian_conditions(rec: LinearRecurrence, c: CalculusConditionSet,
                         radical_hi: int = RADICAL_CHECK_HI) -> CalculusReport:
    """Sign the Wronskian form of f' for Q a(n) = P_d a(n-1) + ... + P_0 a(n-d-1).

    f' = sum_i W_i / (Q^2 Pi_{d-i}) - sum_i P_i Pi_{d-i}' / (Q Pi_{d-i}^2),
    Pi_k = f1...fk.  The derivative part has the right sign when Q > 0 and
    P_i <= 0 for i < d; the free part is bounded term by term.  A refuted
    sufficient condition makes the report Inconclusive, never Disproved.
    """
    d = rec.degree_d
    W = wronskians(rec)
    notes = ["W_%d = %s" % (i, W[i].to_str("n")) for i in range(d + 1)]
    if d == 1:
        if c.m_squared is not None:
            raise CalculusError("first-order quotient recurrences need a rational bound m")
        base = from_recurrence(rec, c.name, m=c.m, M=c.M, n0=c.n0, direction=c.direction,
                               base_check_hi=c.base_check_hi, base_check_lo=c.base_check_lo,
                               max_shift=c.max_shift)
        P0 = RatFun(rec.rhs[1], rec.lhs)
        if _query(-P0, c.n0, c).proved:
            rep, via = check_thm41(base), "thm41"
        else:
            if c.M is None:
                raise CalculusError("the case P0 >= 0 needs an upper bound M")
            rep, via = check_thm42(base), "thm42"
        return replace(rep, method=f"wronskian d=1 via {via}", notes=rep.notes + tuple(notes))
    Q = rec.lhs
    s = c.sign
    conds: Conditions = [("Q > 0", _query(RatFun(Q), c.n0, c, strict=True))]
    for i in range(d):
        P = rec.rhs[d - i]
        if not P.is_zero():
            conds.append((f"P{i} <= 0", _query(RatFun(-P), c.n0, c)))
    rational = RatFun(0)
    radical = []
    for i in range(d + 1):
        k = d - i
        if W[i].is_zero():
            continue
        sw = _one_sign(RatFun(W[i]), c.n0, c)
        if sw is None:
            conds.append((f"W{i} one-signed", _inconclusive("Wronskian changes sign on the ray")))
            continue
        if k == 0:
            rational = rational + RatFun(W[i])
            continue
        use_small = (sw < 0) if s > 0 else (sw > 0)
        if use_small:
            if c.m_squared is not None:
                radical.append((RatFun(W[i]), _lagged_product(c.m_squared, k)))
            else:
                rational = rational + RatFun(W[i]) / _lagged_product(c.m, k)
        elif c.M is not None:
            rational = rational + RatFun(W[i]) / _lagged_product(c.M, k)
    rel = ">=" if s > 0 else "<="
    key = None
    if not radical:
        conds.append((f"free part {rel} 0", _query(rational * s, c.n0, c)))
        key = rational.num
    elif len(radical) == 1:
        B, G = radical[0]
        squared = rational * rational * G - B * B
        conds.append((f"free part, rational side {rel} 0", _query(rational * s, c.n0, c)))
        conds.append(("free part, squared comparison >= 0", _query(squared, c.n0, c)))
        key = squared.num
    else:
        conds.append(("free part", _inconclusive("more than one radical term")))
    if c.m_squared is None:
        bconds, bbase, _ = _bounds(c, quotient_form(rec).coeffs)
    else:
        bconds = []
        bbase = _radical_base(replace(c, sequence=rec), radical_hi)
        notes.append(f"radical lower bound checked exactly for n <= {radical_hi} only")
    prefix, pnotes = _base_prefix(replace(c, sequence=rec))
    return CalculusReport(
        c.name, f"wronskian d={d}",
        _combine(conds + bconds, bbase + prefix, refute=False),
        tuple(conds + bconds), key if key is not None else PolyQ(), bbase + prefix, tuple(notes) + pnotes,
    )
