"""Independent brute-force reference implementations used only by the tests.

These are deliberately written with no code shared with the package: plain
dense Gaussian elimination, naive span growing, and a dense derivation-space
eliminator.  They exist to cross-check the production routines.
"""

from __future__ import annotations

from fractions import Fraction


def dense_solve(matrix, rhs):
    """Plain dense Gaussian elimination over Q.

    Returns (particular, kernel_basis) or None when the system has no
    solution.  Rows/entries may be ints or Fractions.
    """
    m = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    nrows = len(m)
    ncols = len(matrix[0]) if matrix else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if m[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if m[i][ncols] != 0:
            return None
    particular = [Fraction(0)] * ncols
    for row_idx, c in enumerate(pivots):
        particular[c] = m[row_idx][ncols]
    free = [c for c in range(ncols) if c not in pivots]
    kernel = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row_idx, c in enumerate(pivots):
            v[c] = -m[row_idx][f]
        kernel.append(tuple(v))
    return [tuple(particular), kernel]


def dense_rank(matrix):
    if not matrix:
        return 0
    sol = dense_solve(matrix, [0] * len(matrix))
    return len(matrix[0]) - len(sol[1])


class NaiveSpan:
    """Row span maintained by storing raw vectors and testing membership by
    re-eliminating from scratch (quadratic and dumb on purpose)."""

    def __init__(self, ncols):
        self.ncols = ncols
        self.vectors = []

    def contains(self, vec):
        if all(x == 0 for x in vec):
            return True
        rows = [list(v) for v in self.vectors]
        if not rows:
            return False
        sol = dense_solve(
            [[rows[i][j] for i in range(len(rows))] for j in range(self.ncols)],
            list(vec),
        )
        return sol is not None

    def add(self, vec):
        if self.contains(vec):
            return False
        self.vectors.append([Fraction(x) for x in vec])
        return True

    @property
    def dim(self):
        return len(self.vectors)


def bracket_of_vectors(table, n, u, v):
    """Bilinear bracket of coordinate vectors given {(i, j): {k: coeff}}, i < j."""
    out = [Fraction(0)] * n
    for (i, j), targets in table.items():
        w = u[i] * v[j] - u[j] * v[i]
        if w == 0:
            continue
        for k, c in targets.items():
            out[k] += w * Fraction(c)
    return out


def naive_lcs_dims(table, n):
    """Lower central series dims by naive span growing over raw brackets."""
    basis = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    current = basis
    dims = [n]
    while True:
        span = NaiveSpan(n)
        for v in current:
            for e in basis:
                w = bracket_of_vectors(table, n, v, e)
                if any(x != 0 for x in w):
                    span.add(w)
        dims.append(span.dim)
        if span.dim == 0:
            return dims
        if span.dim == dims[-2]:
            return dims  # stabilized above zero: not nilpotent
        current = [list(v) for v in span.vectors]


def dense_derivation_dim(table, n):
    """Dimension of the derivation algebra via a dense Leibniz system.

    Unknowns D[a][b] columnwise (D X_j = sum_a D[a][j] X_a) flattened as
    a * n + j.
    """
    def coeff(i, j, k):
        if i == j:
            return Fraction(0)
        if i < j:
            return Fraction(table.get((i, j), {}).get(k, 0))
        return -Fraction(table.get((j, i), {}).get(k, 0))

    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            for b in range(n):
                row = [Fraction(0)] * (n * n)
                for k in range(n):
                    c = coeff(i, j, k)
                    if c:
                        row[b * n + k] += c
                for a in range(n):
                    c = coeff(a, j, b)
                    if c:
                        row[a * n + i] -= c
                    c = coeff(i, a, b)
                    if c:
                        row[a * n + j] -= c
                if any(x != 0 for x in row):
                    rows.append(row)
    if not rows:
        return n * n
    return n * n - dense_rank(rows)
