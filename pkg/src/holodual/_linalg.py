"""Gaussian elimination over exact fields (Fraction or Cyclotomic entries)."""

from __future__ import annotations

from fractions import Fraction


def _rref(rows, ncols):
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c] if isinstance(rows[r][c], (int, Fraction)) else rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(rows) -> int:
    rows = [[Fraction(x) if isinstance(x, int) else x for x in r] for r in rows]
    if not rows:
        return 0
    return len(_rref(rows, len(rows[0]))[1])


def solve(A, b):
    """A solution of ``A x = b`` or None; ``A`` is given by rows."""
    n = len(A[0]) if A else 0
    aug = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(A, b)]
    red, pivots = _rref(aug, n + 1)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = red[i][n]
    return x


def inverse(A):
    """Inverse of a square rational matrix, or None if singular."""
    n = len(A)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(A)]
    red, pivots = _rref(aug, n)
    if pivots != list(range(n)):
        return None
    return [row[n:] for row in red]
