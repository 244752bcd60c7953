"""Lattice path counts by dynamic programming over explicit step sets."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

DEFAULT_CAP = 60

FAMILIES = ("motzkin", "dyck", "delannoy", "schroder", "motzkin_min_plateau")


class OracleCapError(ValueError):
    """An enumeration was asked for more than its cap allows."""


@dataclass(frozen=True)
class PathCountSpec:
    """``length`` is the number of steps for Motzkin paths, the semilength
    for Dyck paths and the grid side for Delannoy/Schroeder paths."""

    length: int
    family: str
    l: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("length must be nonnegative")
        if self.family not in FAMILIES:
            raise ValueError(f"unknown path family {self.family!r}")
        if self.family == "motzkin_min_plateau" and self.l < 0:
            raise ValueError("plateau bound l must be nonnegative")


def _motzkin(n: int) -> int:
    ways = {0: 1}
    for _ in range(n):
        nxt = defaultdict(int)
        for h, c in ways.items():
            if h > 0:
                nxt[h - 1] += c
            nxt[h] += c
            nxt[h + 1] += c
        ways = nxt
    return ways.get(0, 0)


def _dyck(semi: int) -> int:
    ways = {0: 1}
    for _ in range(2 * semi):
        nxt = defaultdict(int)
        for h, c in ways.items():
            if h > 0:
                nxt[h - 1] += c
            nxt[h + 1] += c
        ways = nxt
    return ways.get(0, 0)


def _grid(n: int, below_diagonal: bool) -> int:
    """Paths (0,0) -> (n,n) with steps (1,0), (0,1), (1,1); optionally never above y = x."""
    ways = {(0, 0): 1}
    for x in range(n + 1):
        for y in range(n + 1):
            if (x, y) == (0, 0) or (below_diagonal and y > x):
                continue
            ways[(x, y)] = ways.get((x - 1, y), 0) + ways.get((x, y - 1), 0) + ways.get((x - 1, y - 1), 0)
    return ways.get((n, n), 0)


def _min_plateau(n: int, l: int) -> int:
    # state: (height, level steps since the last Up capped at l, last non-Level step was Up)
    ways = {(0, 0, False): 1}
    for _ in range(n):
        nxt = defaultdict(int)
        for (h, run, after_up), c in ways.items():
            nxt[(h + 1, 0, True)] += c
            nxt[(h, min(run + 1, l), after_up) if after_up else (h, 0, False)] += c
            if h > 0 and (not after_up or run >= l):
                nxt[(h - 1, 0, False)] += c
        ways = nxt
    return sum(c for (h, _, _), c in ways.items() if h == 0)


def count_paths(spec: PathCountSpec, cap: int = DEFAULT_CAP) -> int:
    if spec.length > cap:
        raise OracleCapError(f"length {spec.length} exceeds the cap {cap}")
    n = spec.length
    if spec.family == "motzkin":
        return _motzkin(n)
    if spec.family == "dyck":
        return _dyck(n)
    if spec.family == "delannoy":
        return _grid(n, below_diagonal=False)
    if spec.family == "schroder":
        return _grid(n, below_diagonal=True)
    return _min_plateau(n, spec.l)
