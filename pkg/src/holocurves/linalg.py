"""Exact linear algebra over the Gaussian rationals.

Row reduction, rank, nullspace, determinant, and inverse on small dense
matrices represented as lists of lists of GaussianRational.  Everything is
exact; rank decisions never touch floating point.
"""

from __future__ import annotations

from .rational import GaussianRational, ONE, ZERO


def _coerce_matrix(m):
    return [[e if isinstance(e, GaussianRational) else GaussianRational(e) for e in row] for row in m]


def rref(matrix):
    """Reduced row echelon form; returns (rref_rows, pivot_columns)."""
    m = _coerce_matrix(matrix)
    if not m:
        return m, []
    rows, cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if not m[i][c].is_zero()), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c].inverse()
        m[r] = [e * inv for e in m[r]]
        for i in range(rows):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(matrix) -> int:
    return len(rref(matrix)[1])


def nullspace(matrix):
    """Basis of the right nullspace, one coefficient vector per free column."""
    m = _coerce_matrix(matrix)
    if not m:
        return []
    cols = len(m[0])
    red, pivots = rref(m)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [ZERO] * cols
        v[fc] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def det(matrix) -> GaussianRational:
    m = _coerce_matrix(matrix)
    n = len(m)
    sign = ONE
    acc = ONE
    for c in range(n):
        pivot = next((i for i in range(c, n) if not m[i][c].is_zero()), None)
        if pivot is None:
            return ZERO
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            sign = -sign
        acc = acc * m[c][c]
        inv = m[c][c].inverse()
        for i in range(c + 1, n):
            if not m[i][c].is_zero():
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return acc * sign


def invert(matrix):
    """Exact inverse of a square matrix; returns None if singular."""
    m = _coerce_matrix(matrix)
    n = len(m)
    aug = [m[i] + [ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        return None
    return [row[n:] for row in red]


def mat_vec(matrix, vec):
    out = []
    for row in matrix:
        acc = ZERO
        for a, b in zip(row, vec):
            acc = acc + a * b
        out.append(acc)
    return out
