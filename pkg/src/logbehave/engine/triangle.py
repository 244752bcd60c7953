"""Two-index triangles a(n, k) and their row/column checks."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..exact import scalar
from ..model.recurrences import TwoIndexRecurrence
from .classify import _lc


@dataclass(frozen=True)
class Triangle:
    name: str
    rows: tuple

    def entry(self, n: int, k: int):
        if n < 0 or n >= len(self.rows) or k < 0 or k >= len(self.rows[n]):
            return Fraction(0)
        return self.rows[n][k]

    def row(self, n: int) -> tuple:
        return self.rows[n]

    def __len__(self):
        return len(self.rows)


def triangle_eval(rec: TwoIndexRecurrence, rows: int) -> Triangle:
    """a(n, k) for 0 <= k <= n < rows."""
    b = rec.boundary
    out = []
    for n in range(rows):
        if n == 0:
            out.append((scalar(b.corner),))
            continue
        prev = out[-1]
        row = []
        for k in range(n + 1):
            if k == 0 and b.column is not None:
                row.append(scalar(b.column))
                continue
            left = prev[k - 1] if k >= 1 else 0
            up = prev[k] if k < len(prev) else 0
            v = Fraction(0)
            if left:
                v = v + rec.R(n, k) * left
            if up:
                v = v + rec.S(n, k) * up
            row.append(scalar(v))
        out.append(tuple(row))
    return Triangle(rec.name, tuple(out))


@dataclass(frozen=True)
class TriangleReport:
    mode: str
    checked: int
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations


def _support(row) -> tuple:
    """(first, last) nonzero positions, or None for a zero row."""
    nz = [k for k, v in enumerate(row) if v != 0]
    return (nz[0], nz[-1]) if nz else None


def triangle_checks(tri: Triangle, mode: str = "rows") -> TriangleReport:
    """rows: each row is log-concave with no internal zeros.
    columns: a(n+1,k) a(n,k-1) >= a(n,k) a(n+1,k-1) wherever a(n,k-1) and
    a(n+1,k-1) are nonzero, i.e. a(n,k)/a(n,k-1) grows with n.
    """
    bad, checked = [], 0
    if mode == "rows":
        for n, row in enumerate(tri.rows):
            sup = _support(row)
            if sup is None:
                continue
            part = row[sup[0]:sup[1] + 1]
            checked += 1
            if any(v == 0 for v in part) or not _lc(part):
                bad.append(n)
    elif mode == "columns":
        for n in range(len(tri) - 1):
            for k in range(1, n + 2):
                if tri.entry(n, k - 1) == 0 or tri.entry(n + 1, k - 1) == 0:
                    continue
                checked += 1
                lhs = tri.entry(n + 1, k) * tri.entry(n, k - 1)
                if lhs < tri.entry(n, k) * tri.entry(n + 1, k - 1):
                    bad.append((n, k))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return TriangleReport(mode, checked, tuple(bad))
