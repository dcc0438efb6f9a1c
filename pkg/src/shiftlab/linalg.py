"""Exact linear algebra over the coefficient fields and over the integers."""

from __future__ import annotations

import numpy as np

#: largest prime for which int64 products of two residues cannot overflow
_NUMPY_PRIME_LIMIT = 3_037_000_499


def _generic_echelon(rows, ncols, field):
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        k = next((i for i in range(r, len(rows)) if not field.is_zero(rows[i][c])), None)
        if k is None:
            continue
        rows[r], rows[k] = rows[k], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [field.mul(inv, x) for x in rows[r]]
        for i in range(r + 1, len(rows)):
            f = rows[i][c]
            if not field.is_zero(f):
                rows[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots, rows[:r]


def _numpy_pivots(mat, p):
    A = np.array(mat, dtype=np.int64) % p
    nrows, ncols = A.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            A[[r, k]] = A[[k, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r, c:] = (A[r, c:] * inv) % p
        idx = r + 1 + np.flatnonzero(A[r + 1:, c])
        if idx.size:
            A[idx, c:] = (A[idx, c:] - np.outer(A[idx, c], A[r, c:])) % p
        pivots.append(c)
        r += 1
    return pivots


def pivot_columns(rows, ncols, field):
    """Pivot columns of the row space, scanning columns left to right.

    Column order is the caller's monomial order, so the pivots are exactly the
    leading monomials of the row space.
    """
    if len(rows) == 0 or ncols == 0:
        return []
    if not field.rational and field.p <= _NUMPY_PRIME_LIMIT:
        return _numpy_pivots(rows, field.p)
    return _generic_echelon(rows, ncols, field)[0]


def rank(rows, ncols, field) -> int:
    return len(pivot_columns(rows, ncols, field))


def determinant(matrix, field):
    m = [list(r) for r in matrix]
    n = len(m)
    det = field.one
    for c in range(n):
        k = next((i for i in range(c, n) if not field.is_zero(m[i][c])), None)
        if k is None:
            return field.zero
        if k != c:
            m[c], m[k] = m[k], m[c]
            det = field.neg(det)
        det = field.mul(det, m[c][c])
        inv = field.inv(m[c][c])
        for i in range(c + 1, n):
            f = field.mul(m[i][c], inv)
            if not field.is_zero(f):
                m[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(m[i], m[c])]
    return det


def inverse(matrix, field):
    n = len(matrix)
    aug = [list(r) + [field.one if i == j else field.zero for j in range(n)]
           for i, r in enumerate(matrix)]
    for c in range(n):
        k = next((i for i in range(c, n) if not field.is_zero(aug[i][c])), None)
        if k is None:
            raise ZeroDivisionError("matrix is singular")
        aug[c], aug[k] = aug[k], aug[c]
        inv = field.inv(aug[c][c])
        aug[c] = [field.mul(inv, x) for x in aug[c]]
        for i in range(n):
            if i != c and not field.is_zero(aug[i][c]):
                f = aug[i][c]
                aug[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


def integer_rank(matrix) -> int:
    """Rank over Q of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(map(int, r)) for r in matrix]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        k = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if k is None:
            continue
        m[r], m[k] = m[k], m[r]
        piv = m[r][c]
        for i in range(r + 1, nrows):
            a = m[i][c]
            row_i = m[i]
            row_r = m[r]
            m[i] = [(piv * x - a * y) // prev for x, y in zip(row_i, row_r)]
        prev = piv
        r += 1
        if r == nrows:
            break
    return r
