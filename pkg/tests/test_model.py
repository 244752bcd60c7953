from __future__ import annotations

from fractions import Fraction

import pytest

from logbehave.engine import (
    QuotientSequence,
    eval_quotient_recursion,
    eval_terms,
    eval_upto,
    quotients,
)
from logbehave.exact import PolyQ, RatFun
from logbehave.model import (
    CatalogEntry,
    LinearRecurrence,
    ModelError,
    NonhomRecurrence,
    QuotientRecurrence,
    a_table,
    catalog_get,
    catalog_names,
    catalog_parameters,
    integer_roots,
    nonhom_quotient_form,
    quotient_form,
    sec_struct_explicit,
    sec_struct_short,
)

from conftest import sample_entries

n = PolyQ.x()


def test_every_name_resolves():
    assert len(catalog_names()) >= 30
    for e in sample_entries() + sample_entries(triangles=True):
        assert isinstance(e, CatalogEntry)
        assert e.description


def test_aliases_and_unknown():
    assert catalog_get("schroder").name == "schroder_big"
    assert catalog_get("t2").name == "t2_matrices"
    with pytest.raises(ModelError):
        catalog_get("nonesuch")
    with pytest.raises(ModelError):
        catalog_get("motzkin", k=3)
    with pytest.raises(ModelError):
        catalog_get("e_k")


def test_parameters_listed():
    assert catalog_parameters("gegenbauer") == ("nu", "t")
    assert catalog_parameters("motzkin") == ()


@pytest.mark.parametrize("entry", [e for e in sample_entries() if len(e.definitions) > 1],
                         ids=lambda e: e.name)
def test_alternate_definitions_agree(entry):
    count = 60
    ref = eval_terms(entry.definitions[0], count)
    for other in entry.definitions[1:]:
        alt = eval_terms(other, count)
        lo = max(ref.origin_index, alt.origin_index)
        hi = min(ref.end, alt.end)
        assert [ref[k] for k in range(lo, hi + 1)] == [alt[k] for k in range(lo, hi + 1)]


@pytest.mark.parametrize("l", [0, 1, 2, 3])
def test_a_table_reproduces_explicit_recurrences(l):
    short = sec_struct_short(l)
    explicit = sec_struct_explicit(l)
    assert short.lhs == explicit.lhs
    assert short.rhs == explicit.rhs


def test_a_table_range():
    assert a_table(1, 1) == 2 * n + 1
    with pytest.raises(ModelError):
        a_table(1, 5)


def _linear_entries():
    return [e for e in sample_entries() if isinstance(e.primary, LinearRecurrence)]


@pytest.mark.parametrize("entry", _linear_entries(), ids=lambda e: e.name)
def test_quotient_form_matches_term_ratios(entry):
    rec = entry.primary
    last = 200
    terms = eval_upto(rec, last)
    zeros = [k for k in terms.indices() if terms[k] == 0]
    start = (zeros[-1] + 2) if zeros else terms.origin_index + 1
    direct = quotients(terms, start)
    qrec = quotient_form(rec)
    qrec = QuotientRecurrence(qrec.coeffs, max(qrec.valid_from, start + qrec.order))
    seeded = eval_quotient_recursion(qrec, direct, last)
    assert seeded.quotients == direct.quotients


def test_motzkin_quotient_form():
    q = quotient_form(catalog_get("motzkin").primary)
    assert q.coeffs == (RatFun(2 * n + 1, n + 2), RatFun(3 * n - 3, n + 2))
    assert q.valid_from == 2


def test_linear_recurrence_validation():
    with pytest.raises(ModelError):
        LinearRecurrence("bad", PolyQ(), (PolyQ([1]),), 1, (1,))
    with pytest.raises(ModelError):
        LinearRecurrence("bad", PolyQ([1]), (PolyQ([1]), PolyQ([1])), 5, (1, 1))


def test_integer_roots():
    assert integer_roots((n - 3) * (n + 2) * (2 * n - 1), -5) == [-2, 3]


def test_nonhom_first_order():
    # a(n) = 2 a(n-1) + 1, a(0) = 1: 1, 3, 7, 15, ...
    rec = NonhomRecurrence("mersenne", RatFun(2), RatFun(1), None, (1,), 1)
    qrec = nonhom_quotient_form(rec)
    terms = [Fraction(2 ** (k + 1) - 1) for k in range(30)]
    for k in range(qrec.valid_from, 30):
        assert qrec.rhs(k, [terms[k - 1] / terms[k - 2]]) == terms[k] / terms[k - 1]
