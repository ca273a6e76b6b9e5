"""Dense exact linear algebra on lists of raw field values."""
from __future__ import annotations

from .fields import Field


def identity(F: Field, n: int) -> list:
    return [[F.one if r == c else F.zero for c in range(n)] for r in range(n)]


def zeros(F: Field, rows: int, cols: int) -> list:
    return [[F.zero] * cols for _ in range(rows)]


def transpose(m: list) -> list:
    return [list(col) for col in zip(*m)] if m else []


def matmul(F: Field, a: list, b: list) -> list:
    if a and len(a[0]) != len(b):
        raise ValueError("inner dimensions differ")
    bt = transpose(b)
    out = []
    for row in a:
        out_row = []
        for col in bt:
            acc = F.zero
            for x, y in zip(row, col):
                if not F.skippable(x) and not F.skippable(y):
                    acc = F.add(acc, F.mul(x, y))
            out_row.append(acc)
        out.append(out_row)
    return out


def scalar_matrix(F: Field, n: int, c) -> list:
    return [[c if r == col else F.zero for col in range(n)] for r in range(n)]


def _echelon(F: Field, m: list, want_det: bool):
    """Row-reduce a copy of ``m``; return (rank, det-or-None)."""
    a = [list(r) for r in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    det = F.one
    rank = 0
    for c in range(cols):
        piv = None
        for r in range(rank, rows):
            if not F.is_zero(a[r][c]):
                piv = r
                break
        if piv is None:
            if want_det:
                return rank, F.zero
            continue
        if piv != rank:
            a[rank], a[piv] = a[piv], a[rank]
            det = F.neg(det)
        p = a[rank][c]
        det = F.mul(det, p)
        pinv = F.inv(p)
        for r in range(rank + 1, rows):
            x = a[r][c]
            if not F.is_zero(x):
                a[r] = F.axpy(a[r], a[rank], F.neg(F.mul(x, pinv)))
        rank += 1
        if rank == rows:
            break
    return rank, det


def det(F: Field, m: list):
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return F.one
    rank, d = _echelon(F, m, True)
    return d if rank == n else F.zero


def rank(F: Field, m: list) -> int:
    if not m or not m[0]:
        return 0
    return _echelon(F, m, False)[0]


def inverse(F: Field, m: list) -> list:
    """Gauss-Jordan inverse; ``ZeroDivisionError`` when singular."""
    n = len(m)
    a = [list(r) + [F.one if i == j else F.zero for j in range(n)] for i, r in enumerate(m)]
    for c in range(n):
        piv = next((r for r in range(c, n) if not F.is_zero(a[r][c])), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        a[c], a[piv] = a[piv], a[c]
        a[c] = F.scale(a[c], F.inv(a[c][c]))
        for r in range(n):
            if r != c and not F.is_zero(a[r][c]):
                a[r] = F.axpy(a[r], a[c], F.neg(a[r][c]))
    return [row[n:] for row in a]


def solve_nullspace(F: Field, m: list) -> list:
    """Basis of ``{x : m x = 0}`` as a list of vectors."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = [list(r) for r in m]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if not F.is_zero(a[i][c])), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        a[r] = F.scale(a[r], F.inv(a[r][c]))
        for i in range(rows):
            if i != r and not F.is_zero(a[i][c]):
                a[i] = F.axpy(a[i], a[r], F.neg(a[i][c]))
        pivots.append(c)
        r += 1
        if r == rows:
            break
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [F.zero] * cols
        v[f] = F.one
        for i, pc in enumerate(pivots):
            v[pc] = F.neg(a[i][f])
        basis.append(v)
    return basis
