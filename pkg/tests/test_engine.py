from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from logbehave.engine import (
    EvaluationError,
    TermList,
    Verdict,
    bc_hypothesis_check,
    bc_transform,
    bc_transform_series,
    classify_window,
    constant_coeff_classify,
    delta,
    divide_by_factorial,
    eval_terms,
    eval_upto,
    limit_estimate,
    newton_test,
    quotients,
    semiadditivity_check,
    triangle_checks,
    triangle_eval,
    within,
)
from logbehave.exact import Quad, sign
from logbehave.model import catalog_get

from conftest import rationals


def test_eval_motzkin():
    assert list(eval_terms(catalog_get("motzkin"), 10).terms) == [1, 1, 2, 4, 9, 21, 51, 127, 323, 835]


def test_eval_offsets():
    t = eval_terms(catalog_get("directed_animals"), 5)
    assert t.origin_index == 1
    assert list(t.terms) == [1, 2, 5, 13, 35]
    assert eval_upto(catalog_get("fib_even"), 4).terms == (1, 3, 8, 21)


def test_eval_rejects_triangles():
    with pytest.raises(TypeError):
        eval_terms(catalog_get("eulerian").primary, 4)


def test_quotients_zero_term():
    t = eval_terms(catalog_get("derangements"), 8)
    with pytest.raises(EvaluationError):
        quotients(t)
    q = quotients(t, 3)
    assert q[3] == 2 and q[4] == Fraction(9, 2)


def test_classify_motzkin_and_strengthened_bound():
    t = eval_upto(catalog_get("motzkin"), 201)
    assert classify_window(t, 0, 201).verdict is Verdict.LOG_CONVEX
    for k in range(1, 201):
        assert t[k - 1] * t[k + 1] <= (1 + Fraction(1, k)) * t[k] ** 2


def test_motzkin_over_factorial_log_concave():
    t = eval_upto(catalog_get("motzkin"), 201)
    for k in range(1, 201):
        assert (k + 1) * t[k] ** 2 >= k * t[k - 1] * t[k + 1]
    assert classify_window(divide_by_factorial(t), 0, 201).verdict is Verdict.LOG_CONCAVE


def test_cassini_alternation():
    t = eval_upto(catalog_get("fibonacci"), 60)
    rep = classify_window(t, 2, 60)
    assert rep.verdict is Verdict.LOG_FIBONACCI
    for k in range(3, 60):
        assert delta(t, k) == (-1) ** (k + 1)


def test_geometric_and_weak_verdicts():
    t = TermList(0, tuple(Fraction(3) ** k for k in range(10)))
    assert classify_window(t, 0, 9).verdict is Verdict.GEOMETRIC
    t = TermList(0, (1, 1, 1, 2, 4, 8))
    rep = classify_window(t, 0, 5)
    assert rep.verdict is Verdict.LOG_CONVEX
    # weak verdict: the first zero Delta is recorded
    assert rep.first_violation == 1


def test_e5_indefinite():
    t = eval_upto(catalog_get("e_k", k=5), 40)
    rep = classify_window(t, 5, 40)
    assert rep.verdict is Verdict.INDEFINITE
    assert rep.first_violation is not None


def test_classify_quad_terms():
    # powers of the golden ratio times k!
    phi = Quad(Fraction(1, 2), Fraction(1, 2), 5)
    t = TermList(0, tuple(phi ** k * factorial(k) for k in range(12)))
    assert classify_window(t, 0, 11).verdict is Verdict.LOG_CONVEX


@given(rationals(1, 6, 5), rationals(1, 6, 5), rationals(1, 10, 5))
def test_constant_coeff_matches_scan(r1, r2, a1):
    assume(r1 > r2)
    assume(a1 > r2)
    C1, C2 = r1 + r2, r1 * r2
    v = constant_coeff_classify(C1, C2, 1, a1, horizon=40)
    vals = [Fraction(1), a1]
    for _ in range(40):
        vals.append(C1 * vals[-1] - C2 * vals[-2])
    scan = classify_window(TermList(0, tuple(vals)), 0, 40).verdict
    assert v is scan


def test_limit_estimate_direction():
    t = eval_upto(catalog_get("catalan"), 80)
    est = limit_estimate(quotients(t), 10)
    assert est.direction == "increasing"
    assert est.value < 4
    assert within(est.value, 4, Fraction(1, 10))
    assert not within(est.value, 4, Fraction(1, 1000))


def test_bc_routes_agree():
    for a in ([1, 1], [1] * 5, [2, 0, 3], [Fraction(1, 2), 1]):
        for form in ("factorial", "bc"):
            assert bc_transform(a, 20, form).terms == bc_transform_series(a, 20, form).terms


def test_bc_hypothesis():
    assert bc_hypothesis_check([1, 1, 1]).ok
    rep = bc_hypothesis_check([1, 0, 1])
    assert not rep.ok and rep.reason == "internal zero"
    assert not bc_hypothesis_check([1, 2, 5], form="bc").ok


@given(st.lists(st.integers(1, 6), min_size=1, max_size=5))
def test_bc_conclusion_on_log_concave_inputs(a):
    if not bc_hypothesis_check(a, form="bc").ok:
        return
    b = bc_transform(a, 30, form="bc")
    assert classify_window(b, 0, 29).verdict in (Verdict.LOG_CONVEX, Verdict.GEOMETRIC)
    assert classify_window(divide_by_factorial(b), 0, 29).verdict in (Verdict.LOG_CONCAVE, Verdict.GEOMETRIC)


def test_semiadditivity_bell():
    t = eval_upto(catalog_get("bell"), 40)
    assert semiadditivity_check(t, 40).ok


def test_semiadditivity_catches_violation():
    t = TermList(0, tuple(Fraction(1) for _ in range(10)))
    rep = semiadditivity_check(t, 9)
    assert rep.ok
    t = TermList(0, (1, 2, 1, 1, 1))
    assert semiadditivity_check(t, 4).lower_violations


def test_newton():
    r = newton_test([comb(6, k) for k in range(7)], 6)
    assert r.log_concave and r.normalized_log_concave
    r = newton_test([1, 2, 1, 1], 3)
    assert not r.normalized_log_concave


def test_triangles():
    tri = triangle_eval(catalog_get("eulerian").primary, 8)
    assert tri.row(4) == (1, 11, 11, 1, 0)
    tri = triangle_eval(catalog_get("stirling2").primary, 6)
    assert tri.row(5) == (0, 1, 15, 25, 10, 1)
    assert triangle_checks(tri, "rows").ok
    assert triangle_checks(triangle_eval(catalog_get("stirling1").primary, 26), "rows").ok
    with pytest.raises(ValueError):
        triangle_checks(tri, "diagonals")


def test_factorial_division():
    t = divide_by_factorial(TermList(0, tuple(factorial(k) for k in range(6))))
    assert set(t.terms) == {1}
