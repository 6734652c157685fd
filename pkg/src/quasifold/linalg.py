"""Gaussian elimination over an exact field.

Matrices are lists of rows.  Entries may be :class:`~quasifold.scalar.Scalar`,
``Fraction`` or ``int``; only ``+ - * /`` and truthiness are used, so every
result is exact.
"""

from __future__ import annotations


def rref(rows):
    """Reduced row echelon form.

    Returns ``(R, pivots)`` where ``R`` is a new matrix with the same shape
    and ``pivots`` lists the pivot column of each nonzero row.
    """
    R = [list(r) for r in rows]
    if not R:
        return R, []
    n_rows, n_cols = len(R), len(R[0])
    pivots = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        for i in range(r, n_rows):
            if R[i][c]:
                break
        else:
            continue
        R[r], R[i] = R[i], R[r]
        p = R[r][c]
        R[r] = [x / p for x in R[r]]
        for i in range(n_rows):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
    return R, pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def solve(A, b):
    """Solve the square system ``A x = b``; ``None`` if ``A`` is singular."""
    n = len(A)
    if n == 0:
        return []
    aug = [list(row) + [rhs] for row, rhs in zip(A, b)]
    R, pivots = rref(aug)
    if len(pivots) < n or pivots[-1] == n:
        return None
    return [R[i][n] for i in range(n)]


def nullspace(rows, n_cols=None):
    """Basis of ``{x : rows @ x = 0}`` read off the reduced echelon form.

    One basis vector per free column, carrying a 1 in that column and 0 in
    the other free columns.  ``one`` and ``zero`` are taken from the matrix
    entries so that the basis lives in the same field.
    """
    if not rows:
        if n_cols is None:
            raise ValueError("n_cols required for an empty matrix")
        return [[1 if i == j else 0 for i in range(n_cols)] for j in range(n_cols)]
    n_cols = len(rows[0])
    R, pivots = rref(rows)
    sample = rows[0][0] if n_cols else 0
    zero = sample - sample
    one = zero + 1
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * n_cols
        v[f] = one
        for i, p in enumerate(pivots):
            v[p] = -R[i][f]
        basis.append(v)
    return basis


def dot(u, v):
    it = iter(zip(u, v))
    try:
        x, y = next(it)
    except StopIteration:
        return 0
    acc = x * y
    for x, y in it:
        acc = acc + x * y
    return acc


def transpose(rows, n_cols=None):
    if not rows:
        return [[] for _ in range(n_cols or 0)]
    return [list(col) for col in zip(*rows)]
