"""Reduce the interlacing induction to exact base checks and ray queries."""

from __future__ import annotations

from typing import Dict, Tuple

from ..engine import EvaluationError, eval_upto, quotients
from ..exact import RatFun, Status, ratfun_ray_positive, sign
from ..model import quotient_form
from .types import AT, NEXT, BaseCheck, CertificateError, PlanTerm, SandwichCertificate, SandwichReport

Laurent = Dict[Tuple[int, ...], RatFun]


def _unit(width: int, j: int, v: int) -> Tuple[int, ...]:
    e = [0] * width
    e[j - 1] = v
    return tuple(e)


def _add(e1, e2):
    return tuple(a + b for a, b in zip(e1, e2))


def _expand(term: PlanTerm, width: int) -> Laurent:
    """The term as a Laurent polynomial in q(n-1), ..., q(n-width)."""
    acc: Laurent = {(0,) * width: term.coeff}
    for j, theta in term.num:
        nxt: Laurent = {}
        up = _unit(width, j, 1)
        for e, c in acc.items():
            k = _add(e, up)
            nxt[k] = nxt.get(k, RatFun(0)) + c
            if theta != 0:
                nxt[e] = nxt.get(e, RatFun(0)) - c * theta
        acc = nxt
    for k in term.den:
        down = _unit(width, k, -1)
        acc = {_add(e, down): c for e, c in acc.items()}
    return acc


def plan_identity_holds(coeffs, plan, width: int) -> bool:
    """Sum of the rewritten terms equals sum_i c_i / (q1...qi) identically."""
    total: Laurent = {}
    for term in plan:
        for e, c in _expand(term, width).items():
            total[e] = total.get(e, RatFun(0)) + c
    want: Laurent = {}
    for i, c in enumerate(coeffs):
        if c.is_zero():
            continue
        e = tuple(-1 if j < i else 0 for j in range(width))
        want[e] = want.get(e, RatFun(0)) + c
    clean = lambda d: {e: c for e, c in d.items() if not c.is_zero()}
    return clean(total) == clean(want)


def trivial_plan(coeffs) -> tuple:
    return tuple(PlanTerm(c, (), tuple(range(1, i + 1))) for i, c in enumerate(coeffs) if not c.is_zero())


def _endpoints(direction: str) -> Tuple[str, str]:
    """(selector of the lower endpoint, selector of the upper endpoint) for q(n-j)."""
    return (AT, NEXT) if direction == "increasing" else (NEXT, AT)


def verify_sandwich(cert: SandwichCertificate) -> SandwichReport:
    qrec = quotient_form(cert.sequence)
    d = max(qrec.order, 1)
    plan = cert.plan if cert.plan is not None else trivial_plan(qrec.coeffs)
    width = max([qrec.order] + [t.max_lag for t in plan] + [1])
    if not plan_identity_holds(qrec.coeffs, plan, width):
        raise CertificateError(f"{cert.name}: rewritten terms do not sum to the quotient recurrence")
    if cert.base_hi - cert.base_lo + 1 < qrec.order:
        raise CertificateError(f"{cert.name}: base window shorter than the recurrence order {qrec.order}")
    ns = cert.base_hi + 1
    if ns < qrec.valid_from:
        raise CertificateError(f"{cert.name}: the quotient recurrence only holds from n = {qrec.valid_from}")

    b = cert.bound
    inc = cert.direction == "increasing"
    lo_sel, hi_sel = _endpoints(cert.direction)

    def bound_at(n):
        try:
            return b(n)
        except ZeroDivisionError:
            raise CertificateError(f"{cert.name}: bound has a pole at n = {n}") from None

    def L(n):
        return bound_at(n) if inc else bound_at(n + 1)

    def U(n):
        return bound_at(n + 1) if inc else bound_at(n)

    first = cert.prefix_lo if cert.prefix_lo is not None else cert.base_lo
    last = cert.base_hi + cert.audit
    try:
        terms = eval_upto(cert.sequence, last)
        q = quotients(terms, start=first)
    except EvaluationError as exc:
        raise CertificateError(f"{cert.name}: cannot evaluate quotients ({exc})") from None

    # -- exact base ---------------------------------------------------------
    checks = []
    for n in range(first, cert.base_hi):
        ok = q[n] <= q[n + 1] if inc else q[n] >= q[n + 1]
        checks.append(BaseCheck(n, "monotone", ok, f"q({n}) vs q({n + 1})"))
    for n in range(cert.base_hi - d + 1, cert.base_hi + 1):
        checks.append(BaseCheck(n, "positive", sign(bound_at(n)) > 0, f"b({n}) > 0"))
        checks.append(BaseCheck(n, "lower", L(n) <= q[n], f"lower bound at n = {n}"))
        checks.append(BaseCheck(n, "upper", q[n] <= U(n), f"upper bound at n = {n}"))
    for n in range(ns, last + 1):
        ok = L(n) <= q[n] <= U(n)
        if not ok:
            checks.append(BaseCheck(n, "audit", False, f"q({n}) leaves the sandwich"))
            break
    if any(not c.ok for c in checks):
        return SandwichReport(cert.name, Status.DISPROVED, tuple(checks), None, None,
                              step_start=ns, notes=("exact check failed",))

    # -- side conditions on the ray ---------------------------------------
    side, notes = [], []
    ray = dict(max_shift=cert.max_shift, domain="integer")

    def need(label, r, n0, strict=False):
        v = ratfun_ray_positive(r, n0, strict=strict, **ray)
        side.append((label, v))
        return v.proved

    shifted = {}

    def bsel(sel: str, j: int) -> RatFun:
        key = (sel, j)
        if key not in shifted:
            shifted[key] = b.shift(-j if sel == AT else 1 - j)
        return shifted[key]

    ok = need("bound positive", b, ns - width, strict=True)
    step = b.shift(1) - b
    ok &= need("bound monotone", step if inc else -step, cert.base_hi - d + 1)

    lower_sum, upper_sum = RatFun(0), RatFun(0)
    for idx, term in enumerate(plan):
        c = term.coeff
        if c.is_zero():
            continue
        if ratfun_ray_positive(c, ns, **ray).proved:
            s = 1
        elif ratfun_ray_positive(-c, ns, **ray).proved:
            s = -1
        else:
            notes.append(f"term {idx + 1}: coefficient {c.to_str()} is not one-signed on n >= {ns}")
            ok = False
            continue
        for j, theta in term.num:
            ok &= need(f"term {idx + 1}: q(n-{j}) - {theta} >= 0", bsel(lo_sel, j) - theta, ns)
        for side_name, want_num in (("lower", s > 0), ("upper", s < 0)):
            num_sel = lo_sel if want_num else hi_sel
            den_sel = hi_sel if want_num else lo_sel
            chosen = tuple([num_sel] * len(term.num) + [den_sel] * len(term.den))
            given = getattr(term, side_name)
            if given is not None and given != chosen:
                notes.append(f"term {idx + 1}: {side_name} selectors {given} are not the sound choice {chosen}")
                ok = False
            est = c
            for j, theta in term.num:
                est = est * (bsel(num_sel, j) - theta)
            for k in term.den:
                est = est / bsel(den_sel, k)
            if side_name == "lower":
                lower_sum = lower_sum + est
            else:
                upper_sum = upper_sum + est

    target_lo = b if inc else b.shift(1)
    target_hi = b.shift(1) if inc else b
    lower_expr = lower_sum - target_lo
    upper_expr = target_hi - upper_sum
    lower_v = ratfun_ray_positive(lower_expr, ns, **ray)
    upper_v = ratfun_ray_positive(upper_expr, ns, **ray)
    proved = ok and lower_v.proved and upper_v.proved
    if not ok:
        notes.append("a side condition was not established")
    for label, v in (("lower", lower_v), ("upper", upper_v)):
        if not v.proved:
            notes.append(f"{label} step {v.status}: {v.note}".rstrip(": "))
    return SandwichReport(
        cert.name,
        Status.PROVED if proved else Status.INCONCLUSIVE,
        tuple(checks),
        lower_v,
        upper_v,
        lower_expr.num,
        upper_expr.num,
        tuple(side),
        ns,
        tuple(notes),
    )
