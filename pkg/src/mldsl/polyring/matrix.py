"""Small dense matrices of polynomials: Jacobians and their minors."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .poly import Polynomial
from .ring import PolyRing


class PolyMatrix:
    def __init__(self, ring: PolyRing, rows: Sequence[Sequence[Polynomial]]):
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix")
        for r in rows:
            for x in r:
                if x.ring != ring:
                    raise ValueError("matrix entries must share one ring")
        self.ring = ring
        self.rows = len(rows)
        self.cols = width
        self.entries = tuple(x for r in rows for x in r)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def stack(self, other: "PolyMatrix") -> "PolyMatrix":
        if other.cols != self.cols:
            raise ValueError("column counts differ")
        return PolyMatrix(self.ring, [self.row(i) for i in range(self.rows)]
                          + [other.row(i) for i in range(other.rows)])

    def determinant(self, rows=None, cols=None) -> Polynomial:
        rows = tuple(range(self.rows)) if rows is None else tuple(rows)
        cols = tuple(range(self.cols)) if cols is None else tuple(cols)
        if len(rows) != len(cols):
            raise ValueError("determinant of a non-square selection")
        return _laplace(self, rows, cols, {})

    def minors(self, k: int) -> list[Polynomial]:
        """All nonzero k x k minors, rows-major over index combinations."""
        if not 1 <= k <= min(self.rows, self.cols):
            raise ValueError(f"minor size {k} out of range for a {self.rows}x{self.cols} matrix")
        memo: dict = {}
        out = []
        for rs in combinations(range(self.rows), k):
            for cs in combinations(range(self.cols), k):
                d = _laplace(self, rs, cs, memo)
                if d:
                    out.append(d)
        return out

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"PolyMatrix[{body}]"


def _laplace(M, rows, cols, memo):
    key = (rows, cols)
    if key in memo:
        return memo[key]
    if len(rows) == 1:
        d = M[rows[0], cols[0]]
    else:
        d = M.ring.zero()
        r0, rest = rows[0], rows[1:]
        for j, c in enumerate(cols):
            a = M[r0, c]
            if not a:
                continue
            sub = _laplace(M, rest, cols[:j] + cols[j + 1 :], memo)
            if sub:
                d = d + a * sub if j % 2 == 0 else d - a * sub
    memo[key] = d
    return d
