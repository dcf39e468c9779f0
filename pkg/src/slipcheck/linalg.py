"""Exact rational Gaussian elimination on small dense or sparse-row matrices."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def rref(rows: Sequence[Sequence], ncols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [[Fraction(x) for x in row] for row in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        pr = m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                row = m[i]
                m[i] = [a - f * b for a, b in zip(row, pr)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1]) if rows else 0


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of ``{v : rows @ v = 0}``, one vector per free column."""
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


class SparseEchelon:
    """Incremental row echelon basis over Q for rows given as ``{col: value}``.

    Rows are reduced against the stored pivots as they arrive, so ``rank``
    is always current.  Used where constraint rows are produced in batches.
    """

    def __init__(self):
        self.pivot_rows: dict[int, dict[int, Fraction]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    def reduce(self, row: dict[int, Fraction]) -> dict[int, Fraction]:
        row = {k: Fraction(v) for k, v in row.items() if v}
        while row:
            # eliminate the smallest column first; pivots are kept normalized
            hit = None
            for c in sorted(row):
                if c in self.pivot_rows:
                    hit = c
                    break
            if hit is None:
                return row
            f = row[hit]
            for k, v in self.pivot_rows[hit].items():
                nv = row.get(k, 0) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        return row

    def add(self, row: dict[int, Fraction]) -> bool:
        """Insert ``row``; return True if it increased the rank."""
        row = self.reduce(row)
        if not row:
            return False
        c = min(row)
        inv = 1 / row[c]
        self.pivot_rows[c] = {k: v * inv for k, v in row.items()}
        return True

    def contains(self, row: dict[int, Fraction]) -> bool:
        return not self.reduce(row)
