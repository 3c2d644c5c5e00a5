"""Fraction-free Gaussian elimination over the integers.

Matrices are lists of lists of ints (row major). Bareiss elimination keeps
every intermediate entry an integer; only the final back-substitution divides.
"""

from fractions import Fraction


def _bareiss_echelon(rows, ncols):
    """Row-echelon form by Bareiss elimination.

    Eliminates only within the first ``ncols`` columns (extra columns, e.g. an
    augmented right-hand side, are carried along). Returns the reduced rows and
    the list of pivot columns.
    """
    m = [list(r) for r in rows]
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = next((k for k in range(r, len(m)) if m[k][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        for k in range(r + 1, len(m)):
            mk = m[k][c]
            m[k] = [(piv * m[k][j] - mk * m[r][j]) // prev for j in range(len(m[k]))]
        prev = piv
        pivots.append(c)
        r += 1
    return m, pivots


def rank(matrix):
    if not matrix:
        return 0
    _, pivots = _bareiss_echelon(matrix, len(matrix[0]))
    return len(pivots)


class NotInSpanError(ValueError):
    """The right-hand side is not a combination of the given columns."""


class SingularSystemError(ValueError):
    """The columns are linearly dependent, so a solution is not unique."""


def solve(columns, rhs):
    """Solve ``sum_j c_j * columns[j] = rhs`` exactly.

    ``columns`` is a list of integer vectors of a common length; ``rhs`` is an
    integer vector of that length. Returns a list of Fractions. Raises
    NotInSpanError if no solution exists and SingularSystemError if the columns
    are dependent.
    """
    ncols = len(columns)
    nrows = len(rhs)
    if ncols == 0:
        if any(rhs):
            raise NotInSpanError("nonzero vector, empty basis")
        return []
    aug = [[columns[j][i] for j in range(ncols)] + [rhs[i]] for i in range(nrows)]
    m, pivots = _bareiss_echelon(aug, ncols)
    if len(pivots) < ncols:
        raise SingularSystemError(f"columns have rank {len(pivots)} < {ncols}")
    if any(m[k][ncols] != 0 for k in range(len(pivots), nrows)):
        raise NotInSpanError("nonzero residual")
    x = [Fraction(0)] * ncols
    for k in range(len(pivots) - 1, -1, -1):
        c = pivots[k]
        s = Fraction(m[k][ncols]) - sum(m[k][j] * x[j] for j in range(c + 1, ncols))
        x[c] = s / m[k][c]
    return x
