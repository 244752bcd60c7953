from __future__ import annotations

import io
import json
from fractions import Fraction
from pathlib import Path

import jsonschema
import pytest
from hypothesis import given
from hypothesis import strategies as st

from logbehave import calculus, sandwich
from logbehave.cli import DSLError, parse_dsl, parse_file, print_dsl, run_command
from logbehave.cli.commands import run_conditions
from logbehave.cli.dsl import ConditionSpec
from logbehave.cli.report import load_schema
from logbehave.exact import PolyQ, Quad, RatFun
from logbehave.model import LinearRecurrence, catalog_get, catalog_names

from conftest import SAMPLE_PARAMS

CERTS = Path(__file__).resolve().parent.parent / "certs"
SCHEMA = load_schema()


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, _ = run("--format", "json", *argv)
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    assert doc["exit_code"] == code
    return code, doc


# -- the documented examples -------------------------------------------------

def test_eval_motzkin_csv():
    code, out, _ = run("eval", "motzkin", "--terms", 10, "--format", "csv")
    lines = out.strip().splitlines()
    assert code == 0
    assert lines[0] == "n,value"
    assert len(lines) == 11
    assert lines[-1] == "9,835"


def test_verify_motzkin_cert():
    code, out, _ = run("verify", "sandwich", CERTS / "motzkin.cert")
    assert code == 0
    assert out.splitlines()[0] == "motzkin: Proved"


def test_classify_e5():
    code, out, _ = run("classify", "e_k", "--k", 5, "--window", "5:40")
    assert code == 1
    assert "Indefinite" in out


# -- DSL ---------------------------------------------------------------------

MOTZKIN_BLOCK = """
sequence motzkin {
  Q(n) = n + 2
  P1(n) = 2*n + 1
  P0(n) = 3*(n - 1)
  init a(0) = 1, a(1) = 1
  valid n >= 2
}
"""


def test_motzkin_block_equals_catalog():
    assert parse_dsl(MOTZKIN_BLOCK).main() == catalog_get("motzkin").primary


def test_quad_bound_expression():
    text = MOTZKIN_BLOCK + """
certificate s {
  sequence motzkin
  bound = (3 + sqrt(5))/2 * 2*n/(2*n+3)
  base 3..4
}
"""
    cert = parse_dsl(text).main()
    n = PolyQ.x()
    phi2 = Quad(Fraction(3, 2), Fraction(1, 2), 5)
    assert cert.bound == RatFun(2 * n, 2 * n + 3) * phi2
    assert cert.bound.num.radical == 5


def test_binom_expands():
    rec = parse_dsl("sequence t { Q(n) = 1; P0(n) = binom(n - 1, 2); init a(0) = 1; valid n >= 1 }").main()
    n = PolyQ.x()
    assert rec.rhs[0] == (n - 1) * (n - 2) * Fraction(1, 2)


def test_malformed_reports_location():
    with pytest.raises(DSLError) as exc:
        parse_dsl("sequence s {\n  Q(n) =\n}")
    assert exc.value.line == 2
    assert exc.value.col == 9
    assert "expected an expression" in str(exc.value)


@pytest.mark.parametrize("text", [
    "sequence s { Q(n) = n; P0(n) = m; init a(0) = 1; valid n >= 1 }",
    "certificate c { sequence nowhere; bound = n; base 1..2 }",
    "sequence s { Q(n) = n; P0(n) = 1; init a(0) = 1; valid n >= 1; colour blue }",
    "conditions c { sequence motzkin; method thm99 }",
])
def test_parse_errors(text):
    with pytest.raises(DSLError):
        parse_dsl(text)


coeff_st = st.fractions(min_value=-20, max_value=20, max_denominator=6)
poly_st = st.lists(coeff_st, min_size=1, max_size=4).map(PolyQ)


@given(poly_st.filter(lambda p: not p.is_zero()), st.lists(poly_st, min_size=1, max_size=4),
       st.lists(st.integers(-5, 9), min_size=4, max_size=4))
def test_sequence_roundtrip(lhs, rhs, init):
    rec = LinearRecurrence("r", lhs, tuple(rhs), len(rhs), tuple(init[: len(rhs)]))
    assert parse_dsl(print_dsl(rec)).main() == rec


@pytest.mark.parametrize("name", list(sandwich.BUNDLED) + list(sandwich.NEGATIVE_CONTROLS))
def test_certificate_roundtrip(name):
    cert = sandwich.bundled_certificate(name)
    assert parse_dsl(print_dsl(cert)).main() == cert


@pytest.mark.parametrize("name", list(sandwich.BUNDLED) + list(sandwich.NEGATIVE_CONTROLS))
def test_cert_files_match_bundled(name):
    assert parse_file(CERTS / f"{name}.cert").main() == sandwich.bundled_certificate(name)


COND_FILES = {
    "schroder_thm41": "schroder", "motzkin_thm42": "motzkin", "franel3": "franel3",
    "directed_animals": "directed_animals", "baxter": "baxter", "gegenbauer_2_2": "gegenbauer_2_2",
    "gegenbauer_half_3": "gegenbauer_half_3", "gegenbauer_deriv_1_2": "gegenbauer_deriv_1_2",
    "laguerre_-1": "laguerre_-1", "cycle_graphs": "cycle_graphs", "motzkin_m3": "motzkin_m3",
    "positive_s": "positive_s",
}


@pytest.mark.parametrize("fname,bundled", list(COND_FILES.items()))
def test_condition_files_match_bundled(fname, bundled):
    spec = parse_file(CERTS / f"{fname}.cond").main()
    assert isinstance(spec, ConditionSpec)
    assert run_conditions(spec) == calculus.run_bundled(bundled)


@pytest.mark.parametrize("fname", list(COND_FILES))
def test_condition_roundtrip(fname):
    spec = parse_file(CERTS / f"{fname}.cond").main()
    assert parse_dsl(print_dsl(spec)).main() == spec


def test_sqrt_bound_in_conditions():
    spec = parse_file(CERTS / "cycle_graphs.cond").main()
    assert spec.m is None
    assert spec.m_squared == RatFun.x() + 1


# -- reports -----------------------------------------------------------------

@pytest.mark.parametrize("argv", [
    ("eval", "motzkin", "--terms", 12),
    ("eval", "eulerian", "--terms", 5),
    ("quotients", "schroder", "--window", "2:20"),
    ("quotients", "sec_struct", "--l", 1, "--terms", 15),
    ("classify", "motzkin", "--window", "0:60"),
    ("classify", "bell", "--window", "0:30", "--divide-factorial"),
    ("limit", "catalan", "--terms", 200),
    ("triangle", "stirling2", "--terms", 10),
    ("triangle", "eulerian", "--terms", 12, "--mode", "columns"),
    ("crosscheck", "motzkin", "--against", "oracle", "--terms", 12),
    ("verify", "sandwich", CERTS / "motzkin.cert", CERTS / "derangements_bad.cert"),
    ("verify", "calculus", CERTS / "schroder_thm41.cond"),
    ("catalog", "list"),
])
def test_json_reports_validate(argv):
    run_json(*argv)


def test_deterministic_output():
    for fmt in ("json", "csv", "text"):
        argv = ["--format", fmt, "verify", "sandwich", CERTS / "sec_struct_1.cert"]
        assert run(*argv) == run(*argv)


def test_csv_is_exact():
    _, out, _ = run("--format", "csv", "quotients", "motzkin", "--window", "2:8")
    assert "≈" not in out and "." not in out
    assert "3,2" in out and "4,9/4" in out
    _, text, _ = run("quotients", "motzkin", "--window", "4:4")
    assert "9/4 ≈ 2.25" in text


def test_jobs_keeps_input_order():
    files = [CERTS / f for f in ("t2_matrices.cert", "motzkin.cert", "derangements_bad.cert",
                                 "sec_struct_1_unsplit.cert", "derangements.cert")]
    c1, d1 = run_json("verify", "sandwich", *files)
    c4, d4 = run_json("verify", "sandwich", "--jobs", 4, *files)
    assert d1 == d4
    assert c1 == c4 == 1
    assert [r["name"] for r in d4["result"]["reports"]] == [
        "t2_matrices", "motzkin", "derangements_bad", "sec_struct_1_unsplit", "derangements"]


def test_exit_codes():
    assert run("verify", "sandwich", CERTS / "sec_struct_1_unsplit.cert")[0] == 2
    assert run("verify", "calculus", CERTS / "motzkin_m3.cond")[0] == 1
    assert run("verify", "calculus", "sym012_matrices")[0] == 2
    assert run("eval", "nonesuch")[0] == 3
    assert run("eval")[0] == 3
    assert run("eval", "e_k")[0] == 3
    assert run("classify", "motzkin", "--window", "9")[0] == 3
    assert run("crosscheck", "baxter", "--against", "oracle")[0] == 3
    assert run("frobnicate")[0] == 3


def test_parse_error_exit(tmp_path):
    bad = tmp_path / "bad.cert"
    bad.write_text("sequence s {\n  Q(n) =\n}\n", encoding="utf-8")
    code, out, _ = run("--format", "json", "verify", "sandwich", bad)
    assert code == 3
    report = json.loads(out)["result"]["reports"][0]
    assert report["status"] == "Error"
    assert "line 2, column 9" in report["error"]


def test_max_shift_override():
    code, doc = run_json("verify", "sandwich", "--max-shift", 0, CERTS / "motzkin.cert")
    for cond in doc["result"]["reports"][0]["conditions"]:
        assert cond["shift"] in (0, None)
    assert code in (0, 2)


def test_bundled_names_without_files():
    assert run("verify", "sandwich", "sec_struct_2")[0] == 0
    assert run("verify", "calculus", "baxter")[0] == 0


def _argv_for(name):
    params = SAMPLE_PARAMS.get(name, [{}])[0]
    out = []
    for k, v in params.items():
        out += [f"--{k}", str(v)]
    return out


@pytest.mark.parametrize("name", catalog_names())
def test_every_entry_reachable(name):
    entry = catalog_get(name, **SAMPLE_PARAMS.get(name, [{}])[0])
    code, doc = run_json("eval", name, "--terms", 8, *_argv_for(name))
    assert code == 0
    if not entry.is_triangle:
        lo = entry.offset + (2 if name in ("derangements", "t2_matrices") else 0)
        if name == "t2_matrices":
            lo = 3
        code, doc = run_json("classify", name, "--window", f"{lo}:{lo + 12}", *_argv_for(name))
        assert code in (0, 1)


def test_catalog_list_has_every_name():
    _, doc = run_json("catalog", "list")
    names = [e["name"] for e in doc["result"]["entries"]]
    assert names == catalog_names()
    assert all(e["description"] for e in doc["result"]["entries"])


@pytest.mark.parametrize("name,against", [
    ("motzkin", "conv"), ("motzkin", "oracle"), ("franel3", "direct"),
    ("eulerian", "oracle"), ("binomial", "direct"), ("derangements", "direct"),
])
def test_crosscheck_agrees(name, against):
    code, doc = run_json("crosscheck", name, "--against", against, "--terms", 8)
    assert code == 0
    assert doc["result"]["mismatches"] == []
    assert doc["result"]["compared"] > 0
