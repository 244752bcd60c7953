"""Counts obtained by filtering all n! permutations."""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import factorial

from .paths import OracleCapError

PERMUTATION_CAP = 9

PREDICATES = ("derangement", "order_divides", "cycles_at_most", "ascents_equal", "cycles_equal")


def cycle_lengths(p: tuple) -> list:
    seen = [False] * len(p)
    out = []
    for s in range(len(p)):
        if seen[s]:
            continue
        length, i = 0, s
        while not seen[i]:
            seen[i] = True
            i = p[i]
            length += 1
        out.append(length)
    return out


def ascents(p: tuple) -> int:
    return sum(1 for a, b in zip(p, p[1:]) if a < b)


def _test(p: tuple, predicate: str, k) -> bool:
    if predicate == "derangement":
        return all(p[i] != i for i in range(len(p)))
    if predicate == "order_divides":
        return all(k % c == 0 for c in cycle_lengths(p))
    if predicate == "cycles_at_most":
        return all(c <= k for c in cycle_lengths(p))
    if predicate == "ascents_equal":
        return ascents(p) == k
    return len(cycle_lengths(p)) == k


def count_permutations(n: int, predicate: str, k: int | None = None,
                       cap: int = PERMUTATION_CAP) -> int:
    if predicate not in PREDICATES:
        raise ValueError(f"unknown predicate {predicate!r}")
    if predicate != "derangement" and k is None:
        raise ValueError(f"{predicate} needs k")
    if n > cap:
        raise OracleCapError(f"n = {n} exceeds the cap {cap}")
    return sum(1 for p in permutations(range(n)) if _test(p, predicate, k))


def derangements_inclusion_exclusion(n: int) -> int:
    """D_n = n! sum_j (-1)^j / j!."""
    total = sum(Fraction((-1) ** j, factorial(j)) for j in range(n + 1)) * factorial(n)
    return int(total)
