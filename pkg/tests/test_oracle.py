from __future__ import annotations

from math import comb

import pytest

from logbehave import oracle
from logbehave.engine import Verdict, classify_window, eval_upto, triangle_eval
from logbehave.engine.terms import TermList
from logbehave.model import catalog_get
from logbehave.oracle import OracleCapError, PathCountSpec


def _terms(name, last, **kw):
    return eval_upto(catalog_get(name, **kw), last)


def test_motzkin_paths():
    t = _terms("motzkin", 40)
    for n in range(41):
        assert oracle.count_paths(PathCountSpec(n, "motzkin")) == t[n]


def test_schroder_and_delannoy_paths():
    s, d = _terms("schroder_big", 25), _terms("delannoy", 25)
    for n in range(26):
        assert oracle.count_paths(PathCountSpec(n, "schroder")) == s[n]
        assert oracle.count_paths(PathCountSpec(n, "delannoy")) == d[n] == oracle.central_delannoy(n)


@pytest.mark.parametrize("l", [0, 1, 2, 3])
def test_plateau_bijection(l):
    for n in range(15):
        assert oracle.count_paths(PathCountSpec(n, "motzkin_min_plateau", l)) == \
            oracle.count_secondary_direct(n, l)


def test_secondary_rank_minus_one_is_catalan():
    for n in range(13):
        assert oracle.count_secondary_direct(n, -1) == oracle.catalan(n + 1)


def test_secondary_structure_predicate():
    assert oracle.is_secondary_structure(5, 1, [(1, 4)])
    assert not oracle.is_secondary_structure(5, 1, [(1, 2)])
    assert not oracle.is_secondary_structure(6, 0, [(1, 4), (2, 5)])


def test_eulerian_oracle():
    tri = triangle_eval(catalog_get("eulerian").primary, 9)
    for n in range(1, 9):
        for k in range(n):
            assert oracle.count_permutations(n, "ascents_equal", k) == tri.entry(n, k)


def test_stirling_oracles():
    s1 = triangle_eval(catalog_get("stirling1").primary, 8)
    s2 = triangle_eval(catalog_get("stirling2").primary, 8)
    for n in range(1, 8):
        for k in range(1, n + 1):
            assert oracle.count_permutations(n, "cycles_equal", k) == s1.entry(n, k)
            assert oracle.count_set_partitions(n, k) == s2.entry(n, k)


def test_franel_direct():
    f3, f4 = _terms("franel3", 500), _terms("franel4", 500)
    for n in range(0, 501, 7):
        assert oracle.count_franel_direct(n, 3) == f3[n]
        assert oracle.count_franel_direct(n, 4) == f4[n]


def test_permutation_oracles():
    d = _terms("derangements", 9)
    e5 = _terms("e_k", 9, k=5)
    c3 = _terms("c_k", 9, k=3)
    for n in range(10):
        assert oracle.count_permutations(n, "derangement") == d[n] == oracle.derangements_inclusion_exclusion(n)
        assert oracle.count_permutations(n, "order_divides", 5) == e5[n]
        assert oracle.count_permutations(n, "cycles_at_most", 3) == c3[n]


def test_matrix_oracles():
    t2, sym, cyc = _terms("t2_matrices", 8), _terms("sym012_matrices", 8), _terms("cycle_graphs", 8)
    for n in range(1, 8):
        assert oracle.count_t2_matrices(n) == t2[n]
        assert oracle.count_sym012_matrices(n) == sym[n]
        assert oracle.count_cycle_graphs(n) == cyc[n]


def test_bell_triangle():
    b = _terms("bell", 12)
    assert oracle.bell_triangle(13)[:13] == list(b.terms)


def test_catalan_log_convex():
    t = TermList(0, tuple(oracle.catalan(n) for n in range(101)))
    assert classify_window(t, 0, 100).verdict is Verdict.LOG_CONVEX
    assert oracle.catalan(5) == comb(10, 5) // 6


def test_caps():
    with pytest.raises(OracleCapError):
        oracle.count_paths(PathCountSpec(10 ** 4, "motzkin"))
    with pytest.raises(OracleCapError):
        oracle.count_permutations(20, "derangement")
    with pytest.raises(ValueError):
        PathCountSpec(3, "zigzag")
