"""Bundled calculus condition sets and their negative controls."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, Tuple

from ..exact import RatFun
from ..model import catalog_get
from ..model.recurrences import LinearRecurrence
from .checks import (
    check_bounds_invariant,
    check_decomposition,
    check_thm41,
    check_thm42,
    check_threeterm,
    from_recurrence,
    gegenbauer_decomposition,
    gegenbauer_deriv_decomposition,
    laguerre_decomposition,
    wronskian_conditions,
)
from .types import DECREASING, INCREASING, CalculusReport

Q = Fraction
X = RatFun.x()


def _rec(name: str, **params) -> LinearRecurrence:
    return catalog_get(name, **params).primary


def schroder_thm41():
    return from_recurrence(_rec("schroder_big"), "schroder", m=3, n0=2, base_check_hi=12)


def schroder_bounds():
    return from_recurrence(_rec("schroder_big"), "schroder", m=3, M=6, n0=2, base_check_hi=12)


def motzkin_thm42():
    return from_recurrence(_rec("motzkin"), "motzkin", m=2, M=Q(7, 2), n0=2, base_check_hi=12)


def franel3_thm42():
    return from_recurrence(_rec("franel3"), "franel3", m=5, M=9, n0=2, base_check_hi=12)


def animals_thm42():
    return from_recurrence(_rec("directed_animals"), "directed_animals", m=2, M=Q(7, 2), n0=2,
                           base_check_hi=12)


def baxter_threeterm():
    return from_recurrence(_rec("baxter"), "baxter", m=7, M=9, n0=47, base_check_hi=49, base_check_lo=1)


def gegenbauer_set(nu, t, direction):
    return from_recurrence(_rec("gegenbauer", nu=nu, t=t), None, m=1 / RatFun(t), n0=1,
                           direction=direction, base_check_hi=12)


def gegenbauer_deriv_set(nu, t, direction):
    return from_recurrence(_rec("gegenbauer_deriv", nu=nu, t=t), None, m=1 / RatFun(t), n0=2,
                           direction=direction, base_check_hi=12)


def laguerre_set(t):
    return from_recurrence(_rec("laguerre", t=t), None, m=1, M=1 - RatFun(t), n0=1,
                           direction=DECREASING, base_check_hi=12)


def cycle_graphs_set():
    return from_recurrence(_rec("cycle_graphs"), "cycle_graphs", m=None, m_squared=X + 1, n0=2,
                           base_check_hi=12)


def sym012_set():
    return from_recurrence(_rec("sym012_matrices"), "sym012_matrices", m=X - 1, M=2 * X, n0=5,
                           base_check_hi=500)


def motzkin_m3():
    return from_recurrence(_rec("motzkin"), "motzkin_m3", m=3, M=Q(7, 2), n0=2, base_check_hi=12)


def positive_s():
    """f = 2 + 1/f1, whose S = 1 > 0 violates the sign hypothesis S <= 0."""
    rec = LinearRecurrence("positive_s", RatFun(1).num, (RatFun(2).num, RatFun(1).num), 2, (1, 2))
    return from_recurrence(rec, "positive_s", m=1, n0=1, base_check_hi=8)


Runner = Callable[[], CalculusReport]

BUNDLED: Dict[str, Tuple[str, Runner]] = {
    "schroder": ("thm41", lambda: check_thm41(schroder_thm41())),
    "schroder_bounds": ("bounds", lambda: check_bounds_invariant(schroder_bounds())),
    "motzkin": ("thm42", lambda: check_thm42(motzkin_thm42())),
    "motzkin_bounds": ("bounds", lambda: check_bounds_invariant(motzkin_thm42())),
    "franel3": ("thm42", lambda: check_thm42(franel3_thm42())),
    "directed_animals": ("thm42", lambda: check_thm42(animals_thm42())),
    "baxter": ("threeterm", lambda: check_threeterm(baxter_threeterm())),
    "gegenbauer_2_2": ("decomposition", lambda: check_decomposition(
        gegenbauer_decomposition(2, 2), gegenbauer_set(2, 2, DECREASING))),
    "gegenbauer_half_3": ("decomposition", lambda: check_decomposition(
        gegenbauer_decomposition(Q(1, 2), 3), gegenbauer_set(Q(1, 2), 3, INCREASING))),
    "gegenbauer_deriv_1_2": ("decomposition", lambda: check_decomposition(
        gegenbauer_deriv_decomposition(1, 2), gegenbauer_deriv_set(1, 2, DECREASING))),
    "laguerre_-1": ("decomposition", lambda: check_decomposition(
        laguerre_decomposition(-1), laguerre_set(-1))),
    "cycle_graphs": ("wronskian", lambda: wronskian_conditions(_rec("cycle_graphs"), cycle_graphs_set())),
    "motzkin_wronskian": ("wronskian", lambda: wronskian_conditions(_rec("motzkin"), motzkin_thm42())),
    "sym012_matrices": ("wronskian", lambda: wronskian_conditions(_rec("sym012_matrices"), sym012_set())),
}

NEGATIVE_CONTROLS: Dict[str, Tuple[str, Runner]] = {
    "motzkin_m3": ("bounds", lambda: check_bounds_invariant(motzkin_m3())),
    "positive_s": ("thm41", lambda: check_thm41(positive_s())),
}


def run_bundled(name: str) -> CalculusReport:
    table = {**BUNDLED, **NEGATIVE_CONTROLS}
    if name not in table:
        raise KeyError(f"no bundled condition set named {name!r}")
    return table[name][1]()
