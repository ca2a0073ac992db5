"""Small dense linear algebra over a coefficient field (desk-scale matrices)."""

from __future__ import annotations


def row_reduce(rows, field):
    """Gaussian elimination; returns (rref rows, pivot column list)."""
    rows = [list(r) for r in rows]
    zero = field.zero()
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pivot_row = next((k for k in range(r, len(rows)) if rows[k][c] != zero), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [field.mul(v, inv) for v in rows[r]]
        for k in range(len(rows)):
            if k == r:
                continue
            factor = rows[k][c]
            if factor == zero:
                continue
            rows[k] = [field.sub(a, field.mul(factor, b))
                       for a, b in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(rows, field) -> int:
    return len(row_reduce(rows, field)[1])


def solve_affine(rows, rhs, field):
    """Solve rows * x = rhs, expressing pivot variables affinely in the free ones.

    Requires full row rank; returns (pivot_cols, expressions) where
    expressions[r] = (constant, {free_col: coefficient}) for pivot r, meaning
    x_pivot = constant - sum(coefficient * x_free).  Returns None when the
    matrix drops rank.
    """
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    rref, pivots = row_reduce(aug, field)
    if len(pivots) != len(rows) or any(p == len(rows[0]) for p in pivots):
        return None
    zero = field.zero()
    exprs = []
    for r, p in enumerate(pivots):
        const = rref[r][-1]
        coeffs = {c: rref[r][c] for c in range(len(rows[0]))
                  if c != p and rref[r][c] != zero}
        exprs.append((const, coeffs))
    return pivots, exprs
