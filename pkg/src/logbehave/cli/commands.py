"""Subcommand implementations.  Each returns a :class:`Result`."""

from __future__ import annotations

import os
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace
from fractions import Fraction
from typing import List, Optional, Tuple

from .. import calculus, sandwich
from ..engine import (
    Verdict,
    classify_window,
    divide_by_factorial,
    eval_terms,
    eval_upto,
    limit_estimate,
    newton_test,
    quotients,
    triangle_checks,
    triangle_eval,
)
from ..exact import Status, to_float
from ..model import CatalogEntry, catalog_get, catalog_names, catalog_parameters
from .crosscheck import crosscheck
from .dsl import ConditionSpec, DSLError, parse_file, poly_dsl
from .report import Result, approx, base_dict, exact, verdict_dict


class UsageError(ValueError):
    """Bad arguments; maps to exit code 3."""


STATUS_CODE = {Status.PROVED: 0, Status.DISPROVED: 1, Status.INCONCLUSIVE: 2}


def entry_from_args(name: str, args) -> CatalogEntry:
    params = {}
    for p in catalog_parameters(name):
        v = {"k": args.k, "l": args.k, "nu": args.nu, "t": args.t}[p]
        if v is None:
            raise UsageError(f"{name} needs --{'k' if p in ('k', 'l') else p}")
        params[p] = v
    return catalog_get(name, **params)


def parse_window(text: Optional[str]) -> Optional[Tuple[int, int]]:
    if text is None:
        return None
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise UsageError(f"--window expects lo:hi, got {text!r}") from None
    if hi < lo:
        raise UsageError("--window needs lo <= hi")
    return lo, hi


def _terms(entry: CatalogEntry, args):
    t = eval_terms(entry, args.terms)
    return divide_by_factorial(t) if getattr(args, "divide_factorial", False) else t


# -- sequences --------------------------------------------------------------

def cmd_eval(args) -> Result:
    entry = entry_from_args(args.name, args)
    if entry.is_triangle:
        tri = triangle_eval(entry.primary, args.terms)
        rows = [(n, k, exact(tri.entry(n, k))) for n in range(args.terms) for k in range(n + 1)]
        text = [" ".join(exact(v) for v in tri.row(n)) for n in range(args.terms)]
        payload = {"name": entry.name, "terms": [{"n": n, "k": k, "value": v} for n, k, v in rows]}
        return Result("eval", 0, payload, ("n", "k", "value"), rows, text)
    t = _terms(entry, args)
    rows = [(n, exact(t[n])) for n in t.indices()]
    payload = {"name": entry.name, "terms": [{"n": n, "value": v} for n, v in rows]}
    text = [f"a({n}) = {approx(t[n])}" for n in t.indices()]
    return Result("eval", 0, payload, ("n", "value"), rows, text)


def _quotients_for(entry: CatalogEntry, args, last: int):
    t = eval_upto(entry.primary, last)
    if getattr(args, "divide_factorial", False):
        t = divide_by_factorial(t)
    return quotients(t)


def cmd_quotients(args) -> Result:
    entry = entry_from_args(args.name, args)
    if entry.is_triangle:
        raise UsageError("quotients needs a sequence, not a triangle")
    window = parse_window(args.window)
    last = window[1] if window else entry.offset + args.terms
    qs = _quotients_for(entry, args, last)
    lo = max(window[0], qs.origin_index) if window else qs.origin_index
    rows = [(n, exact(qs[n])) for n in range(lo, last + 1)]
    payload = {"name": entry.name, "terms": [{"n": n, "value": v} for n, v in rows]}
    text = [f"q({n}) = {approx(qs[n])}" for n in range(lo, last + 1)]
    return Result("quotients", 0, payload, ("n", "q"), rows, text)


def cmd_classify(args) -> Result:
    entry = entry_from_args(args.name, args)
    if entry.is_triangle:
        raise UsageError("classify needs a sequence; use the triangle command")
    window = parse_window(args.window) or (entry.offset + 1, entry.offset + 60)
    t = eval_upto(entry.primary, window[1] + 1)
    if args.divide_factorial:
        t = divide_by_factorial(t)
    rep = classify_window(t, *window)
    code = 1 if rep.verdict is Verdict.INDEFINITE else 0
    fv = rep.first_violation
    payload = {"name": entry.name, "window": list(window), "verdict": rep.verdict.value,
               "first_violation": fv, "starting_sign": rep.starting_sign}
    text = [f"{entry.name} on [{window[0]}, {window[1]}]: {rep.verdict.value}"]
    if fv is not None:
        text.append(f"first violation at n = {fv}")
    return Result("classify", code, payload, ("name", "lo", "hi", "verdict", "first_violation"),
                  [(entry.name, window[0], window[1], rep.verdict.value, "" if fv is None else fv)], text)


def cmd_limit(args) -> Result:
    entry = entry_from_args(args.name, args)
    if entry.is_triangle:
        raise UsageError("limit needs a sequence")
    last = entry.offset + args.terms
    qs = _quotients_for(entry, args, last)
    est = limit_estimate(qs, min(8, len(qs) - 1))
    target = entry.known_limit
    payload = {"name": entry.name, "n": est.index, "q": exact(est.value), "direction": est.direction,
               "known_limit": None if target is None else exact(target)}
    text = [f"q({est.index}) = {_short(est.value)} ({est.direction})"]
    if target is not None:
        gap = est.value - target
        payload["difference"] = exact(gap)
        payload["below_limit"] = bool(gap < 0)
        text.append(f"known limit {approx(target)}; q - limit ≈ {to_float(gap):.3e}")
    return Result("limit", 0, payload, tuple(k for k in payload), [tuple(payload.values())], text)


def cmd_triangle(args) -> Result:
    entry = entry_from_args(args.name, args)
    if not entry.is_triangle:
        raise UsageError(f"{entry.name} is not a triangle")
    tri = triangle_eval(entry.primary, args.terms)
    if args.mode == "newton":
        reps = [newton_test(tri.row(n), n) for n in range(args.terms)]
        bad = [n for n, r in enumerate(reps) if not (r.log_concave and r.normalized_log_concave)]
        payload = {"name": entry.name, "mode": "newton", "checked": args.terms, "violations": bad}
        text = [f"{entry.name} newton test on rows < {args.terms}: " + ("ok" if not bad else f"fails at {bad}")]
        return Result("triangle", 1 if bad else 0, payload, ("row",), [(n,) for n in bad], text)
    rep = triangle_checks(tri, args.mode)
    payload = {"name": entry.name, "mode": args.mode, "checked": rep.checked,
               "violations": [str(v) for v in rep.violations]}
    text = [f"{entry.name} {args.mode} on rows < {args.terms}: "
            + ("ok" if rep.ok else f"{len(rep.violations)} violation(s)")]
    text += [f"  {v}" for v in rep.violations]
    return Result("triangle", 0 if rep.ok else 1, payload, ("violation",),
                  [(str(v),) for v in rep.violations], text)


def cmd_crosscheck(args) -> Result:
    entry = entry_from_args(args.name, args)
    try:
        seen, bad = crosscheck(entry, args.against, args.terms)
    except LookupError as e:
        raise UsageError(str(e)) from None
    payload = {"name": entry.name, "against": args.against, "compared": seen,
               "mismatches": [{"at": a, "ours": exact(x), "theirs": exact(y)} for a, x, y in bad]}
    text = [f"{entry.name} vs {args.against}: {seen} value(s) compared, "
            + ("all agree" if not bad else f"{len(bad)} mismatch(es)")]
    text += [f"  {a}: {exact(x)} != {exact(y)}" for a, x, y in bad]
    return Result("crosscheck", 1 if bad else 0, payload, ("at", "ours", "theirs"),
                  [(a, exact(x), exact(y)) for a, x, y in bad], text)


def cmd_catalog_list(args) -> Result:
    entries = []
    for name in catalog_names():
        params = catalog_parameters(name)
        desc = ""
        limit = None
        if not params:
            e = catalog_get(name)
            desc = e.description
            limit = None if e.known_limit is None else exact(e.known_limit)
        else:
            desc = _parametric_description(name)
        entries.append({"name": name, "parameters": list(params), "description": desc, "known_limit": limit})
    rows = [(e["name"], " ".join(e["parameters"]), e["description"], e["known_limit"] or "") for e in entries]
    text = [f"{e['name']:18s} {('(' + ', '.join(e['parameters']) + ')') if e['parameters'] else '':10s} "
            f"{e['description']}" for e in entries]
    return Result("catalog list", 0, {"entries": entries}, ("name", "parameters", "description", "known_limit"),
                  rows, text)


_SAMPLE = {"k": 7, "l": 3, "nu": Fraction(1), "t": Fraction(2)}


def _parametric_description(name: str) -> str:
    """Instance description with the sample values put back as parameter names."""
    params = catalog_parameters(name)
    desc = catalog_get(name, **{p: _SAMPLE[p] for p in params}).description
    for p in params:
        desc = re.sub(rf"\b{_SAMPLE[p]}\b", p, desc)
    return desc


def _short(v) -> str:
    """Exact text when it is readable, else the decimal approximation alone."""
    s = approx(v)
    return s if len(s) <= 80 else f"≈ {to_float(v):.10g}"


# -- verification -----------------------------------------------------------

def run_conditions(spec: ConditionSpec) -> calculus.CalculusReport:
    c = calculus.from_recurrence(
        spec.sequence, spec.name, m=spec.m, M=spec.M, m_squared=spec.m_squared, n0=spec.n0,
        direction=spec.direction, base_check_hi=spec.base_hi, base_check_lo=spec.base_lo,
        max_shift=spec.max_shift,
    )
    if spec.method == "thm41":
        return calculus.check_thm41(c)
    if spec.method == "thm42":
        return calculus.check_thm42(c)
    if spec.method == "bounds":
        return calculus.check_bounds_invariant(c)
    if spec.method == "threeterm":
        return calculus.check_threeterm(c)
    if spec.method == "wronskian":
        return calculus.wronskian_conditions(spec.sequence, c)
    p = dict(spec.params)
    fam = spec.decomposition
    if fam == "generic":
        dec = calculus.standard_decomposition(c)
    elif fam == "gegenbauer":
        dec = calculus.gegenbauer_decomposition(p["nu"], p["t"])
    elif fam == "gegenbauer_deriv":
        dec = calculus.gegenbauer_deriv_decomposition(p["nu"], p["t"])
    else:
        dec = calculus.laguerre_decomposition(p["t"])
    return calculus.check_decomposition(dec, c)


def _sandwich_dict(rep: sandwich.SandwichReport) -> dict:
    conds = [verdict_dict("lower step", rep.lower_step), verdict_dict("upper step", rep.upper_step)]
    conds += [verdict_dict(label, v) for label, v in rep.side_conditions]
    return {
        "name": rep.name, "status": str(rep.status), "step_start": rep.step_start,
        "conditions": [c for c in conds if c is not None],
        "base_results": [base_dict(b) for b in rep.base_results],
        "reduced_lower": poly_dsl(rep.reduced_lower), "reduced_upper": poly_dsl(rep.reduced_upper),
        "notes": list(rep.notes),
    }


def _calculus_dict(rep: calculus.CalculusReport) -> dict:
    return {
        "name": rep.name, "method": rep.method, "status": str(rep.status),
        "conditions": [verdict_dict(label, v) for label, v in rep.condition_results],
        "base_results": [base_dict(b) for b in rep.base_results],
        "reduced_key": poly_dsl(rep.reduced_key), "notes": list(rep.notes),
    }


def verify_one(kind: str, source: str, max_shift: Optional[int]) -> Tuple[int, dict]:
    """Verify one file (or bundled name); returns (exit code, payload)."""
    try:
        if kind == "sandwich":
            if not os.path.exists(source) and source in {**sandwich.BUNDLED, **sandwich.NEGATIVE_CONTROLS}:
                cert = sandwich.bundled_certificate(source)
            else:
                cert = parse_file(source).main()
                if not isinstance(cert, sandwich.SandwichCertificate):
                    raise DSLError(f"{source} holds no certificate block")
            if max_shift is not None:
                cert = replace(cert, max_shift=max_shift)
            rep = sandwich.verify_sandwich(cert)
            return STATUS_CODE[rep.status], {"source": source, **_sandwich_dict(rep)}
        if not os.path.exists(source) and source in {**calculus.BUNDLED, **calculus.NEGATIVE_CONTROLS}:
            rep = calculus.run_bundled(source)
        else:
            spec = parse_file(source).main()
            if not isinstance(spec, ConditionSpec):
                raise DSLError(f"{source} holds no conditions block")
            if max_shift is not None:
                spec = replace(spec, max_shift=max_shift)
            rep = run_conditions(spec)
        return STATUS_CODE[rep.status], {"source": source, **_calculus_dict(rep)}
    except (DSLError, OSError, ValueError) as e:
        return 3, {"source": source, "status": "Error", "error": str(e)}


def _aggregate(codes: List[int]) -> int:
    for c in (3, 1, 2):
        if c in codes:
            return c
    return 0


def cmd_verify(args) -> Result:
    kind = args.kind
    jobs = max(1, args.jobs)
    if jobs == 1 or len(args.files) == 1:
        results = [verify_one(kind, f, args.max_shift) for f in args.files]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(verify_one, [kind] * len(args.files), args.files,
                                    [args.max_shift] * len(args.files)))
    codes = [c for c, _ in results]
    reports = [p for _, p in results]
    text = []
    for p in reports:
        if p["status"] == "Error":
            text.append(f"{p['source']}: Error: {p['error']}")
            continue
        head = f"{p['name']}: {p['status']}"
        text.append(head)
        for cnd in p["conditions"]:
            extra = f" (witness {cnd['witness']})" if cnd["witness"] else ""
            extra += f" [{cnd['note']}]" if cnd["note"] else ""
            text.append(f"  {cnd['label']}: {cnd['status']}{extra}")
        failed = [b for b in p["base_results"] if not b["ok"]]
        text.append(f"  base checks: {len(p['base_results']) - len(failed)}/{len(p['base_results'])} pass")
        text += [f"    n = {b['n']} {b['kind']}: {b['detail']}" for b in failed]
        text += [f"  note: {nt}" for nt in p["notes"]]
    rows = [(p["source"], p.get("name", ""), p["status"]) for p in reports]
    return Result(f"verify {kind}", _aggregate(codes), {"reports": reports}, ("source", "name", "status"),
                  rows, text)
