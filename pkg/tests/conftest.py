from __future__ import annotations

from fractions import Fraction

from hypothesis import settings
from hypothesis import strategies as st

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def rationals(lo=-50, hi=50, max_den=30):
    return st.builds(
        Fraction,
        st.integers(lo * max_den, hi * max_den),
        st.integers(1, max_den),
    )


# One instance of every catalog family, parameters filled in.
SAMPLE_PARAMS = {
    "c_k": [{"k": 1}, {"k": 3}, {"k": 4}],
    "e_k": [{"k": 2}, {"k": 5}],
    "sec_struct": [{"l": 0}, {"l": 1}, {"l": 2}, {"l": 3}],
    "sec_struct_conv": [{"l": -1}, {"l": 1}],
    "sec_struct_short": [{"l": 1}, {"l": 4}],
    "gegenbauer": [{"nu": Fraction(2), "t": Fraction(2)}, {"nu": Fraction(1, 2), "t": Fraction(3)}],
    "gegenbauer_deriv": [{"nu": Fraction(1), "t": Fraction(2)}],
    "chebyshev_u": [{"t": Fraction(3, 2)}],
    "legendre": [{"t": Fraction(3)}],
    "laguerre": [{"t": Fraction(-1)}],
}


def sample_entries(triangles=False):
    from logbehave.model import catalog_get, catalog_names, catalog_parameters

    out = []
    for name in catalog_names():
        for params in SAMPLE_PARAMS.get(name, [{}]) if catalog_parameters(name) else [{}]:
            e = catalog_get(name, **params)
            if e.is_triangle == triangles:
                out.append(e)
    return out


# criterion number -> (passed, detail), filled in by test_acceptance.py
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
