"""Pairings of catalog entries with independent counts for ``crosscheck``."""

from __future__ import annotations

from math import comb
from typing import Callable, Dict, List, Optional, Tuple

from .. import oracle
from ..engine import eval_terms, triangle_eval
from ..model import CatalogEntry

AGAINST = ("conv", "oracle", "direct")

Counter = Callable[[int], int]


def _paths(family: str, shift: int = 0, l: int = 0) -> Counter:
    return lambda n: oracle.count_paths(oracle.PathCountSpec(n + shift, family, l))


def _perm(predicate: str, k: Optional[int] = None) -> Counter:
    return lambda n: oracle.count_permutations(n, predicate, k)


def _sec_oracle(entry: CatalogEntry) -> Counter:
    l = int(entry.param("l"))
    if l < 0:
        return _paths("dyck", shift=1)
    return _paths("motzkin_min_plateau", l=l)


def _family(entry: CatalogEntry) -> str:
    return entry.name.split("(")[0]


def _sequence_counter(entry: CatalogEntry, against: str) -> Optional[Counter]:
    fam = _family(entry)
    if against == "oracle":
        table: Dict[str, Counter] = {
            "motzkin": _paths("motzkin"), "motzkin_conv": _paths("motzkin"),
            "schroder_big": _paths("schroder"), "schroder_conv": _paths("schroder"),
            "delannoy": _paths("delannoy"), "catalan": _paths("dyck"),
            "derangements": _perm("derangement"),
        }
        if fam in ("sec_struct", "sec_struct_short", "sec_struct_conv"):
            return _sec_oracle(entry)
        if fam in ("e_k", "c_k"):
            k = int(entry.param("k"))
            return _perm("order_divides" if fam == "e_k" else "cycles_at_most", k)
        if fam == "involutions":
            return _perm("order_divides", 2)
        return table.get(fam)
    table = {
        "franel3": lambda n: oracle.count_franel_direct(n, 3),
        "franel4": lambda n: oracle.count_franel_direct(n, 4),
        "catalan": oracle.catalan,
        "delannoy": oracle.central_delannoy,
        "bell": lambda n: oracle.bell_triangle(n + 1)[n],
        "cycle_graphs": oracle.count_cycle_graphs,
        "t2_matrices": oracle.count_t2_matrices,
        "sym012_matrices": oracle.count_sym012_matrices,
        "derangements": oracle.derangements_inclusion_exclusion,
    }
    if fam in ("sec_struct", "sec_struct_short", "sec_struct_conv"):
        l = int(entry.param("l"))
        return lambda n: oracle.count_secondary_direct(n, l)
    return table.get(fam)


def _triangle_counter(entry: CatalogEntry, against: str):
    fam = _family(entry)
    if against == "oracle":
        table = {
            "eulerian": lambda n, k: oracle.count_permutations(n, "ascents_equal", k) if n else int(k == 0),
            "stirling1": lambda n, k: oracle.count_permutations(n, "cycles_equal", k) if n else int(k == 0),
            "stirling2": lambda n, k: oracle.count_set_partitions(n, k),
        }
        return table.get(fam)
    if against == "direct" and fam == "binomial":
        return comb
    return None


Mismatch = Tuple[str, object, object]


def crosscheck(entry: CatalogEntry, against: str, terms: int) -> Tuple[int, List[Mismatch]]:
    """Compare the entry against an independent route; returns (compared, mismatches).

    Raises LookupError when no route of that kind is known for the entry.
    """
    if against not in AGAINST:
        raise LookupError(f"--against must be one of {AGAINST}")
    if entry.is_triangle:
        count_nk = _triangle_counter(entry, against)
        if count_nk is None:
            raise LookupError(f"no {against} route for triangle {entry.name}")
        tri = triangle_eval(entry.primary, terms)
        bad, seen = [], 0
        for n in range(terms):
            for k in range(n + 1):
                want = count_nk(n, k)
                seen += 1
                if tri.entry(n, k) != want:
                    bad.append((f"a({n},{k})", tri.entry(n, k), want))
        return seen, bad
    ours = eval_terms(entry, terms)
    if against == "conv":
        if len(entry.definitions) < 2:
            raise LookupError(f"{entry.name} has a single definition")
        bad = []
        for d in entry.definitions[1:]:
            other = eval_terms(d, terms)
            for n in ours.indices():
                if ours[n] != other.get(n):
                    bad.append((f"a({n}) [{type(d).__name__}]", ours[n], other.get(n)))
        return terms * (len(entry.definitions) - 1), bad
    count = _sequence_counter(entry, against)
    if count is None:
        raise LookupError(f"no {against} route for {entry.name}")
    bad = [(f"a({n})", ours[n], count(n)) for n in ours.indices() if ours[n] != count(n)]
    return terms, bad
