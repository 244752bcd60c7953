"""Row log-concavity conditions for a(n, k) = R a(n-1, k-1) + S a(n-1, k).

With f(x, y) = a(x, y)/a(x, y-1), f10 = f(x-1, y) and f11 = f(x-1, y-1),
the part of d/dy [(R + S f10)/(R01 + S01 f11)] free of derivatives of
f10, f11 has numerator

    F = (R01 + S01 f11)(R_y + f10 S_y) - (R + S f10)(R01_y + f11 S01_y),

where R01 = R(x, y-1).  Rows are log-concave when F <= 0.  Expanding F in
f10, f11 gives four Wronskians in y whose nonpositivity is sufficient.
"""

from __future__ import annotations

from typing import Optional, Tuple

from ..engine import triangle_eval
from ..exact import MPoly, orthant_sign
from ..model.recurrences import TwoIndexRecurrence
from .types import CalculusError, GridPoint, TwoIndexReport

# variables of the free term: x, y, f10, f11
_NV = 4


def _lift(p: MPoly) -> MPoly:
    return MPoly(_NV, {e + (0, 0): c for e, c in p.terms.items()})


def _var(i: int) -> MPoly:
    return MPoly.var(_NV, i)


def _parts(rec: TwoIndexRecurrence):
    R, S = rec.R, rec.S
    R01, S01 = R.shift((0, -1)), S.shift((0, -1))
    return R, S, R01, S01


def free_term(rec: TwoIndexRecurrence) -> MPoly:
    """F as a polynomial in (x, y, f10, f11)."""
    R, S, R01, S01 = (_lift(p) for p in _parts(rec))
    f10, f11 = _var(2), _var(3)
    return (R01 + S01 * f11) * (R.diff(1) + f10 * S.diff(1)) - (R + S * f10) * (R01.diff(1) + f11 * S01.diff(1))


def y_wronskians(rec: TwoIndexRecurrence) -> Tuple[Tuple[str, MPoly], ...]:
    """Coefficients of 1, f10, f11, f10 f11 in F."""
    R, S, R01, S01 = _parts(rec)
    w = lambda a, b: a * b.diff(1) - a.diff(1) * b
    return (
        ("W(R01, R)", w(R01, R)),
        ("W(R01, S)", w(R01, S)),
        ("W(S01, R)", w(S01, R)),
        ("W(S01, S)", w(S01, S)),
    )


def _sign_label(p: MPoly, corner) -> str:
    if p.is_zero():
        return "zero"
    s = orthant_sign(p, corner)
    return {1: "nonnegative", -1: "nonpositive"}.get(s, "indefinite")


def eulerian_reduced_identity(rec: TwoIndexRecurrence) -> bool:
    """-F = f11 f10 - 2 f10 + 1 + x(f11 - f10), and with f11 = f10 + d this is
    (f10 - 1)^2 + d (f10 + x), visibly nonnegative for d, f10, x >= 0.
    """
    x, f10, f11 = _var(0), _var(2), _var(3)
    negF = -free_term(rec)
    if negF != f11 * f10 - 2 * f10 + 1 + x * (f11 - f10):
        return False
    # substitute f11 -> f10 + d, reusing the y slot for d (negF is free of y)
    if any(e[1] for e in negF.terms):
        return False
    d = _var(1)
    out = MPoly(_NV)
    for e, c in negF.terms.items():
        out = out + MPoly(_NV, {(e[0], 0, e[2], 0): c}) * (f10 + d) ** e[3]
    return out == (f10 - 1) ** 2 + d * (f10 + x)


def _grid(rec: TwoIndexRecurrence, n_max: int):
    tri = triangle_eval(rec, n_max + 1)
    F = free_term(rec)
    den = _lift(rec.R.shift((0, -1))) + _lift(rec.S.shift((0, -1))) * _var(3)
    points = 0
    bad = []
    for n in range(1, n_max + 1):
        for k in range(2, n + 1):
            a1, a2 = tri.entry(n - 1, k - 1), tri.entry(n - 1, k - 2)
            if a1 == 0 or a2 == 0:
                continue
            f10 = tri.entry(n - 1, k) / a1
            f11 = a1 / a2
            if den(n, k, f10, f11) == 0:
                raise CalculusError(f"denominator R01 + S01 f11 vanishes at (n, k) = ({n}, {k})")
            v = F(n, k, f10, f11)
            points += 1
            if v > 0:
                bad.append(GridPoint(n, k, v))
    return points, tuple(bad)


def check_two_index(rec: TwoIndexRecurrence, n_max: int = 12, wronskian_mode: bool = True,
                    corner=(1, 1), reduced_form: Optional[bool] = None) -> TwoIndexReport:
    """Grid audit of F <= 0 plus, optionally, the Wronskian sufficient conditions.

    ``reduced_form`` runs the Eulerian identity-level argument; by default it
    runs when the recurrence is named "eulerian".  Results are labelled
    "conditions verified" at best: the continuation across cells is not
    part of what is checked here.
    """
    points, bad = _grid(rec, n_max)
    notes = []
    ws: Tuple[Tuple[str, str], ...] = ()
    if wronskian_mode:
        ws = tuple((label, _sign_label(p, corner)) for label, p in y_wronskians(rec))
    if reduced_form is None:
        reduced_form = rec.name == "eulerian"
    identity = eulerian_reduced_identity(rec) if reduced_form else None
    w_ok = bool(ws) and all(s in ("zero", "nonpositive") for _, s in ws)
    if ws and not w_ok:
        notes.append("Wronskian conditions do not all hold: "
                     + ", ".join(f"{l} {s}" for l, s in ws if s not in ("zero", "nonpositive")))
    if bad:
        label = "conditions not verified"
    elif w_ok or identity:
        label = "conditions verified"
    elif not ws and identity is None:
        label = "grid audit only"
    else:
        label = "conditions not verified"
    return TwoIndexReport(rec.name, label, points, bad, ws, identity, tuple(notes))
