"""Exact Gaussian elimination over a cyclotomic field."""
from __future__ import annotations

from typing import Sequence

from .cyclo import ONE, ZERO, CycloNum


class SingularMatrix(ArithmeticError):
    pass


def _eliminate(rows: list[list[CycloNum]], ncols: int) -> tuple[list[list[CycloNum]], list[int]]:
    """Reduced row echelon form on the first ``ncols`` columns; returns (rows, pivot columns)."""
    rows = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if not rows[i][c].is_zero()), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].invert()
        rows[r] = [x * inv if not x.is_zero() else x for x in rows[r]]
        pivot_row = rows[r]
        for i in range(len(rows)):
            if i != r:
                f = rows[i][c]
                if not f.is_zero():
                    rows[i] = [x - f * y if not y.is_zero() else x for x, y in zip(rows[i], pivot_row)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(A: Sequence[Sequence[CycloNum]]) -> int:
    if not A:
        return 0
    _, pivots = _eliminate([list(r) for r in A], len(A[0]))
    return len(pivots)


def solve(A: Sequence[Sequence[CycloNum]], B: Sequence[Sequence[CycloNum]]) -> list[list[CycloNum]]:
    """X with A X = B for square invertible A; B has one column per right-hand side."""
    n = len(A)
    aug = [list(A[i]) + list(B[i]) for i in range(n)]
    rows, pivots = _eliminate(aug, n)
    if len(pivots) < n:
        raise SingularMatrix(f"matrix has rank {len(pivots)} < {n}")
    return [row[n:] for row in rows]


def inverse(A: Sequence[Sequence[CycloNum]]) -> list[list[CycloNum]]:
    n = len(A)
    ident = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    return solve(A, ident)


def matmul(A: Sequence[Sequence[CycloNum]], B: Sequence[Sequence[CycloNum]]) -> list[list[CycloNum]]:
    out = []
    for row in A:
        new = []
        for j in range(len(B[0])):
            acc = ZERO
            for k, a in enumerate(row):
                if not a.is_zero() and not B[k][j].is_zero():
                    acc = acc + a * B[k][j]
            new.append(acc)
        out.append(new)
    return out
