"""Exact sparse linear algebra over the rationals.

Rows are dicts ``{column: value}``.  Elimination is fraction-free: rows are
scaled to integers and combined with integer multipliers, dividing out the
content after each step to keep entries small.  Only the nullspace basis is
returned as Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def _to_int_row(row):
    den = 1
    for v in row.values():
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    out = {}
    for c, v in row.items():
        if v:
            w = v * den
            out[c] = int(w)
    return out


def _normalize(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        for c in row:
            row[c] //= g
    return row


def _eliminate(row, col, piv):
    """row := p*row - row[col]*piv, where p = piv[col]; drops zeros."""
    a, b = piv[col], row[col]
    g = gcd(a, b)
    a, b = a // g, b // g
    out = {}
    for c, v in row.items():
        out[c] = a * v
    for c, v in piv.items():
        out[c] = out.get(c, 0) - b * v
    return _normalize({c: v for c, v in out.items() if v})


class Echelon:
    """Incremental row echelon form; ``add`` returns True if the row was independent."""

    def __init__(self, ncols):
        self.ncols = ncols
        self.order = []  # pivot columns in insertion order
        self.rows = {}  # pivot column -> row

    def reduce(self, row):
        row = _normalize(_to_int_row(row))
        for c in self.order:
            if c in row:
                row = _eliminate(row, c, self.rows[c])
                if not row:
                    break
        return row

    def add(self, row) -> bool:
        row = self.reduce(row)
        if not row:
            return False
        c = min(row)
        if row[c] < 0:
            row = {k: -v for k, v in row.items()}
        self.order.append(c)
        self.rows[c] = row
        return True

    @property
    def rank(self) -> int:
        return len(self.order)

    def nullspace(self):
        """Basis of the solution space of the homogeneous system, one sparse
        vector per free column, each with a 1 in its own free column."""
        rows = {c: dict(r) for c, r in self.rows.items()}
        order = self.order
        for i in range(len(order) - 1, -1, -1):
            ci = order[i]
            r = rows[ci]
            for cj in order[i + 1:]:
                if cj in r:
                    r = _eliminate(r, cj, rows[cj])
            rows[ci] = r
        pivots = set(order)
        free = [c for c in range(self.ncols) if c not in pivots]
        basis = []
        for f in free:
            vec = {f: Fraction(1)}
            for c in order:
                v = rows[c].get(f)
                if v:
                    vec[c] = Fraction(-v, rows[c][c])
            basis.append(vec)
        return free, basis


def rank(rows, ncols=None) -> int:
    """Rank of a matrix given as dense lists or sparse dict rows."""
    rows = [_as_sparse(r) for r in rows]
    if ncols is None:
        ncols = 1 + max((max(r) for r in rows if r), default=-1)
    e = Echelon(ncols)
    for r in rows:
        e.add(r)
    return e.rank


def nullspace(rows, ncols):
    """Basis of {x : M x = 0} as dense Fraction lists."""
    e = Echelon(ncols)
    for r in rows:
        e.add(_as_sparse(r))
    _, basis = e.nullspace()
    return [[vec.get(c, Fraction(0)) for c in range(ncols)] for vec in basis]


def _as_sparse(r):
    if isinstance(r, dict):
        return r
    return {c: v for c, v in enumerate(r) if v}
