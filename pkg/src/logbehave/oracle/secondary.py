"""Secondary structures enumerated as explicit h-bond sets."""

from __future__ import annotations

from typing import Iterator

from .paths import OracleCapError

SECONDARY_CAP = 16


def is_secondary_structure(n: int, l: int, bonds) -> bool:
    """Check the defining conditions for a set of h-bonds (i, j), i <= j, on [n]."""
    seen = set()
    for i, j in bonds:
        if not (1 <= i <= j <= n):
            return False
        if j - i <= l:
            return False
        if i == j and l != -1:
            return False
        ends = {i, j}
        if ends & seen:
            return False
        seen |= ends
    for i, j in bonds:
        for p, q in bonds:
            if i < p < j and not i < q < j:
                return False
    return True


def secondary_structures(n: int, l: int) -> Iterator[tuple]:
    """Yield every h-bond set of a rank-l structure on [n] (bases 1..n)."""

    def gen(lo: int, hi: int):
        # structures on the bases lo..hi
        if lo > hi:
            yield ()
            return
        for rest in gen(lo + 1, hi):
            yield rest
        if l == -1:
            for rest in gen(lo + 1, hi):
                yield ((lo, lo),) + rest
        for j in range(max(lo + l + 1, lo + 1), hi + 1):
            for inner in gen(lo + 1, j - 1):
                for outer in gen(j + 1, hi):
                    yield ((lo, j),) + inner + outer

    yield from gen(1, n)


def count_secondary_direct(n: int, l: int, cap: int = SECONDARY_CAP) -> int:
    if l < -1:
        raise ValueError("rank must be >= -1")
    if n > cap:
        raise OracleCapError(f"n = {n} exceeds the cap {cap}")
    if n == 0:
        return 1
    return sum(1 for _ in secondary_structures(n, l))
