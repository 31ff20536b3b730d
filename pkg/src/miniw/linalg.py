"""Exact sparse linear algebra over Q.

Matrices here are small-to-medium (up to a few thousand rows) but must be
handled without rounding, so everything is done over Fraction / int.  The
sparse eliminator keeps rows as {col: int} dicts, clears denominators on
input and divides by content after every update, which keeps entry growth
tame in practice.
"""

from fractions import Fraction
from math import gcd


class SparseRationalMatrix:
    """Row-major sparse matrix over Q with exact rank computation.

    Rows are dictionaries column -> Fraction.  The matrix is append-only:
    build it with add_entry / add_row, then query rank() or nnz.
    """

    def __init__(self, nrows=0, ncols=0):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = [dict() for _ in range(nrows)]

    def add_entry(self, i, j, value):
        if value == 0:
            return
        while i >= self.nrows:
            self.rows.append(dict())
            self.nrows += 1
        if j >= self.ncols:
            self.ncols = j + 1
        row = self.rows[i]
        new = row.get(j, 0) + value
        if new == 0:
            row.pop(j, None)
        else:
            row[j] = new

    def add_row(self, entries):
        """Append a row given as {col: value}; returns its index."""
        i = self.nrows
        self.rows.append(dict())
        self.nrows += 1
        for j, v in entries.items():
            self.add_entry(i, j, v)
        return i

    @property
    def nnz(self):
        return sum(len(r) for r in self.rows)

    def rank(self):
        return sparse_rank(self.rows)

    def transpose(self):
        out = SparseRationalMatrix(self.ncols, self.nrows)
        for i, row in enumerate(self.rows):
            for j, v in row.items():
                out.add_entry(j, i, v)
        return out


def _integerize(row):
    """Scale a {col: Fraction|int} row to coprime integers."""
    if not row:
        return {}
    denom = 1
    for v in row.values():
        d = v.denominator if isinstance(v, Fraction) else 1
        denom = denom * d // gcd(denom, d)
    out = {}
    g = 0
    for j, v in row.items():
        n = int(v * denom)
        if n:
            out[j] = n
            g = gcd(g, n)
    if g > 1:
        for j in out:
            out[j] //= g
    return out


def sparse_rank(rows):
    """Rank of a list of {col: value} rows; exact, input left untouched."""
    alive = [r for r in (_integerize(row) for row in rows) if r]
    rank = 0
    while alive:
        # pick the sparsest remaining row as pivot row, and within it the
        # column with the smallest entry; this keeps fill-in and coefficient
        # growth manageable without any fancy heuristics.
        pi = min(range(len(alive)), key=lambda i: len(alive[i]))
        piv_row = alive.pop(pi)
        rank += 1
        pj = min(piv_row, key=lambda j: (abs(piv_row[j]), j))
        pv = piv_row[pj]
        rest = []
        for r in alive:
            c = r.get(pj)
            if not c:
                rest.append(r)
                continue
            # r <- (pv/g) * r - (c/g) * piv_row, then divide by content
            g = gcd(pv, c)
            a, b = pv // g, c // g
            if a != 1:
                for j in r:
                    r[j] *= a
            for j, v in piv_row.items():
                nv = r.get(j, 0) - b * v
                if nv:
                    r[j] = nv
                else:
                    r.pop(j, None)
            if r:
                g2 = 0
                for v in r.values():
                    g2 = gcd(g2, v)
                if g2 > 1:
                    for j in r:
                        r[j] //= g2
                rest.append(r)
        alive = rest
    return rank


def dense_rref(matrix):
    """Reduced row echelon form of a list-of-lists over Fraction.

    Returns (rref_rows, pivot_columns).  Input is not modified.
    """
    rows = [[Fraction(x) for x in row] for row in matrix]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def kernel_basis(matrix):
    """Basis of the right kernel of a dense list-of-lists matrix over Q."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    rref, pivots = dense_rref(matrix)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -rref[r][fc]
        basis.append(vec)
    return basis


def solve_dense(matrix, rhs):
    """Solve A x = b for square nonsingular A (lists of Fractions)."""
    n = len(matrix)
    aug = [[Fraction(matrix[i][j]) for j in range(n)] + [Fraction(rhs[i])]
           for i in range(n)]
    rref, pivots = dense_rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("singular system")
    return [rref[i][n] for i in range(n)]


def invert_dense(matrix):
    """Inverse of a square nonsingular matrix over Q."""
    n = len(matrix)
    aug = [[Fraction(matrix[i][j]) for j in range(n)]
           + [Fraction(1 if i == j else 0) for j in range(n)]
           for i in range(n)]
    rref, pivots = dense_rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("singular matrix")
    return [row[n:] for row in rref]
