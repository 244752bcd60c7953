from __future__ import annotations

from dataclasses import replace
from fractions import Fraction

import pytest

from logbehave import sandwich
from logbehave.engine import Verdict, classify_window, eval_upto, quotients
from logbehave.exact import PolyQ, RatFun, Status
from logbehave.model import catalog_get, quotient_form
from logbehave.sandwich import (
    AT,
    NEXT,
    CertificateError,
    PlanTerm,
    SandwichCertificate,
    plan_identity_holds,
    trivial_plan,
    verify_sandwich,
)

n = PolyQ.x()
X = RatFun.x()


@pytest.fixture(scope="module")
def reports():
    names = list(sandwich.BUNDLED) + list(sandwich.NEGATIVE_CONTROLS)
    return {name: verify_sandwich(sandwich.bundled_certificate(name)) for name in names}


@pytest.mark.parametrize("name", list(sandwich.BUNDLED))
def test_bundled_proved(reports, name):
    rep = reports[name]
    assert rep.status is Status.PROVED, rep.notes
    assert all(b.ok for b in rep.base_results)


def test_negative_controls(reports):
    bad = reports["derangements_bad"]
    assert bad.status is Status.DISPROVED
    assert any(not b.ok for b in bad.base_results)
    assert reports["sec_struct_1_unsplit"].status is Status.INCONCLUSIVE


@pytest.mark.parametrize("name", list(sandwich.BUNDLED))
def test_soundness_spot_check(reports, name):
    cert = sandwich.bundled_certificate(name)
    lo = cert.base_lo
    q = quotients(eval_upto(cert.sequence, lo + 501), lo)
    assert all(q[k] < q[k + 1] for k in range(lo, lo + 500))


@pytest.mark.parametrize("name", list(sandwich.BUNDLED) + list(sandwich.NEGATIVE_CONTROLS))
def test_plan_identity(name):
    cert = sandwich.bundled_certificate(name)
    coeffs = quotient_form(cert.sequence).coeffs
    plan = cert.plan if cert.plan is not None else trivial_plan(coeffs)
    width = max([len(coeffs) - 1] + [t.max_lag for t in plan] + [1])
    assert plan_identity_holds(coeffs, plan, width)


def test_broken_plan_rejected():
    cert = sandwich.bundled_certificate("motzkin")
    coeffs = quotient_form(cert.sequence).coeffs
    plan = (PlanTerm(coeffs[0]), PlanTerm(coeffs[1] + 1, (), (1,)))
    with pytest.raises(CertificateError):
        verify_sandwich(replace(cert, plan=plan))


def test_motzkin_proved_implies_log_convex(reports):
    assert reports["motzkin"].proved
    t = eval_upto(catalog_get("motzkin"), 200)
    assert classify_window(t, 0, 200).verdict is Verdict.LOG_CONVEX


def _indefinite_split(cert: SandwichCertificate, lag: int) -> SandwichCertificate:
    """Move +-(n-20)/Q(n) between two copies of the lag term: the identity
    still holds, but neither copy is one-signed on the step ray."""
    rec = cert.sequence
    coeffs = quotient_form(rec).coeffs
    plan = [PlanTerm(c, (), tuple(range(1, i + 1))) for i, c in enumerate(coeffs) if not c.is_zero()]
    wobble = RatFun(n - 20, rec.lhs)
    target = next(i for i, t in enumerate(plan) if len(t.den) == lag)
    t = plan[target]
    plan[target] = PlanTerm(t.coeff + wobble, (), t.den)
    plan.append(PlanTerm(-wobble, (), t.den))
    return replace(cert, name=cert.name + "_indefinite", plan=tuple(plan))


@pytest.mark.parametrize("name,lag", [("motzkin", 1), ("sec_struct_1", 3)])
def test_sign_indefinite_coefficient_is_inconclusive(name, lag):
    cert = _indefinite_split(sandwich.bundled_certificate(name), lag)
    rep = verify_sandwich(cert)
    assert rep.status is Status.INCONCLUSIVE
    assert any("not one-signed" in note for note in rep.notes)


def test_wrong_selector_pattern_flagged():
    rep = verify_sandwich(sandwich.bundled_certificate("sec_struct_1_unsplit"))
    assert any("not the sound choice" in note for note in rep.notes)


def test_quad_bound_certificate(reports):
    cert = sandwich.bundled_certificate("sec_struct_1")
    assert cert.bound.num.radical == 5
    assert reports["sec_struct_2"].proved


def test_certificate_validation():
    rec = catalog_get("motzkin").primary
    with pytest.raises(CertificateError):
        SandwichCertificate("x", rec, X, "sideways", 3, 4)
    with pytest.raises(CertificateError):
        SandwichCertificate("x", rec, X, "increasing", 5, 4)
    with pytest.raises(CertificateError):
        PlanTerm(RatFun(1), (), (0,))
    with pytest.raises(CertificateError):
        PlanTerm(RatFun(1), (), (1,), lower=(AT, NEXT))


def test_decreasing_direction():
    # a(n) = n + 1, q(n) = (n+1)/n, sandwiched as b(n+1) <= q(n) <= b(n) with b = n/(n-1)
    from logbehave.model import LinearRecurrence

    rec = LinearRecurrence("linear", n, (n + 1,), 1, (1,))
    cert = SandwichCertificate("linear", rec, RatFun(n, n - 1), "decreasing", 3, 4, prefix_lo=2)
    assert verify_sandwich(cert).status is Status.PROVED
    bad = SandwichCertificate("linear", rec, RatFun(n + 2, n), "decreasing", 3, 4, prefix_lo=2)
    assert verify_sandwich(bad).status is Status.DISPROVED
