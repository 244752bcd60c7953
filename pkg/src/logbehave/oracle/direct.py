"""Closed forms and small exhaustive counts of matrices, graphs and partitions."""

from __future__ import annotations

from math import comb, factorial
from typing import Iterator

from .paths import OracleCapError

MATRIX_CAP = 8


def count_franel_direct(n: int, r: int) -> int:
    """sum_k C(n, k)^r."""
    if n < 0 or r < 0:
        raise ValueError("n and r must be nonnegative")
    if n > 2000 or r > 8:
        raise OracleCapError("count_franel_direct is capped at n <= 2000, r <= 8")
    return sum(comb(n, k) ** r for k in range(n + 1))


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def central_delannoy(n: int) -> int:
    return sum(comb(n, k) * comb(n + k, k) for k in range(n + 1))


def bell_triangle(rows: int) -> list:
    """Bell numbers B_0..B_{rows-1} read off the Aitken array."""
    if rows <= 0:
        return []
    out = [1]
    row = [1]
    while len(out) < rows:
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        out.append(nxt[0])
        row = nxt
    return out


def set_partitions(n: int) -> Iterator[list]:
    """All set partitions of range(n) as lists of blocks."""
    if n == 0:
        yield []
        return
    for part in set_partitions(n - 1):
        for i in range(len(part)):
            yield part[:i] + [part[i] + [n - 1]] + part[i + 1:]
        yield part + [[n - 1]]


def count_set_partitions(n: int, blocks: int) -> int:
    return sum(1 for p in set_partitions(n) if len(p) == blocks)


def count_cycle_graphs(n: int) -> int:
    """Graphs on [n] whose every component is a cycle (points and edges count)."""
    if n > 10:
        raise OracleCapError("count_cycle_graphs is capped at n <= 10")

    def cycles_on(m: int) -> int:
        return 1 if m <= 2 else factorial(m - 1) // 2

    total = 0
    for part in set_partitions(n):
        w = 1
        for b in part:
            w *= cycles_on(len(b))
        total += w
    return total


def _symmetric_matrices(n: int, diagonal: bool) -> int:
    """Symmetric n x n matrices over {0,1,2} with all row sums 2."""
    if n > MATRIX_CAP:
        raise OracleCapError(f"n = {n} exceeds the cap {MATRIX_CAP}")
    cells = [(i, j) for i in range(n) for j in range(i, n) if diagonal or i != j]
    need = [2] * n
    last = {}
    for idx, (i, j) in enumerate(cells):
        last[i] = idx
        last[j] = idx

    def go(idx: int) -> int:
        if idx == len(cells):
            return int(all(v == 0 for v in need))
        i, j = cells[idx]
        total = 0
        for v in (0, 1, 2):
            if i == j:
                if v > need[i]:
                    break
                need[i] -= v
            else:
                if v > need[i] or v > need[j]:
                    break
                need[i] -= v
                need[j] -= v
            if (last[i] != idx or need[i] == 0) and (last[j] != idx or need[j] == 0):
                total += go(idx + 1)
            need[i] += v
            if i != j:
                need[j] += v
        return total

    if n == 0:
        return 1
    return go(0)


def count_t2_matrices(n: int) -> int:
    """Symmetric N-matrices with zero diagonal and row sums 2."""
    return _symmetric_matrices(n, diagonal=False)


def count_sym012_matrices(n: int) -> int:
    """Symmetric (0,1,2)-matrices with row sums 2."""
    return _symmetric_matrices(n, diagonal=True)
