"""Exact-as-certified linear algebra over the p-adic scalars.

Gaussian elimination with minimal-valuation pivoting: dividing by the
entry of smallest valuation loses no relative precision, so a pivot that
is nonzero to working precision yields an honest rank certificate.
"""

from .errors import RankDeficient


def eliminate(rows):
    """Row-reduce a matrix of PadicScalar entries in place (on a copy).

    Returns (echelon rows, pivot column indices).
    """
    rows = [list(r) for r in rows]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    top = 0
    for col in range(ncols):
        best = None
        for i in range(top, len(rows)):
            e = rows[i][col]
            if e.is_zero():
                continue
            if best is None or e.valuation < rows[best][col].valuation:
                best = i
        if best is None:
            continue
        rows[top], rows[best] = rows[best], rows[top]
        pivot = rows[top][col]
        for i in range(top + 1, len(rows)):
            e = rows[i][col]
            if e.is_zero():
                continue
            factor = e / pivot
            rows[i] = [a - factor * b for a, b in zip(rows[i], rows[top])]
        pivots.append(col)
        top += 1
        if top == len(rows):
            break
    return rows, pivots


def rank(rows):
    """Number of pivots certified nonzero at working precision."""
    _, pivots = eliminate(rows)
    return len(pivots)


def assert_full_column_rank(rows):
    """Certify that the columns are linearly independent; returns the rank."""
    if not rows:
        raise RankDeficient("empty matrix")
    ncols = len(rows[0])
    r = rank(rows)
    if r != ncols:
        raise RankDeficient("rank %d < %d columns" % (r, ncols))
    return r
