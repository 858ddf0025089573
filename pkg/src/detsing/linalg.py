"""Exact linear algebra over the rationals.

Everything here is deterministic and exact: ranks via fraction-free
(Bareiss) elimination on integer matrices, kernels and solving via
Gaussian elimination over `Fraction`.  Large sparse matrices are ranked
by splitting into connected components of the bipartite row/column
graph first; the per-component algorithm is still plain dense Bareiss,
so the output is identical to running dense elimination on the whole
matrix.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _to_int_rows(rows):
    """Scale each row by the lcm of denominators; rank is unchanged."""
    out = []
    for row in rows:
        denom = 1
        for x in row:
            if isinstance(x, Fraction):
                denom = denom * x.denominator // gcd(denom, x.denominator)
        if denom == 1:
            out.append([int(x) for x in row])
        else:
            out.append([int(x * denom) for x in row])
    return out


def rank_dense(rows) -> int:
    """Rank of a dense matrix (list of rows, entries int or Fraction).

    Fraction-free Bareiss elimination with deterministic pivoting: the
    pivot is the smallest-magnitude nonzero entry of the current column
    block (ties broken by position), which keeps the integer growth
    moderate without sacrificing reproducibility.
    """
    a = _to_int_rows(rows)
    if not a or not a[0]:
        return 0
    nrows, ncols = len(a), len(a[0])
    rank = 0
    prev = 1
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        pivot_row = -1
        best = None
        for i in range(r, nrows):
            v = a[i][c]
            if v:
                av = abs(v)
                if best is None or av < best:
                    best = av
                    pivot_row = i
                    if av == 1:
                        break
        if pivot_row < 0:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        piv = a[r][c]
        for i in range(r + 1, nrows):
            if a[i][c] or True:
                row_i = a[i]
                row_r = a[r]
                f = row_i[c]
                for j in range(c, ncols):
                    row_i[j] = (piv * row_i[j] - f * row_r[j]) // prev
        prev = piv
        r += 1
        rank += 1
    return rank


def rank_sparse(entries, nrows: int, ncols: int) -> int:
    """Rank of a sparse matrix given as {(i, j): value}.

    Splits into connected components of the bipartite graph on rows and
    columns (blocks of a block-diagonal structure can never interact in
    elimination), then runs dense Bareiss per component.
    """
    if not entries:
        return 0
    parent: dict = {}

    def find(x):
        root = x
        while parent.get(root, root) != root:
            root = parent[root]
        while parent.get(x, x) != x:
            parent[x], x = root, parent[x]
        return root

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for (i, j) in entries:
        union(("r", i), ("c", j))

    comps: dict = {}
    for (i, j), v in entries.items():
        if v == 0:
            continue
        comps.setdefault(find(("r", i)), []).append((i, j, v))

    total = 0
    for cells in comps.values():
        rids = sorted({i for i, _, _ in cells})
        cids = sorted({j for _, j, _ in cells})
        rpos = {i: k for k, i in enumerate(rids)}
        cpos = {j: k for k, j in enumerate(cids)}
        block = [[0] * len(cids) for _ in rids]
        for i, j, v in cells:
            block[rpos[i]][cpos[j]] = v
        total += rank_dense(block)
    return total


def rref(rows):
    """Reduced row echelon form over Fraction.

    Returns (rref_rows, pivot_columns).  Input rows are not modified.
    """
    a = [[Fraction(x) for x in row] for row in rows]
    if not a:
        return [], []
    nrows, ncols = len(a), len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        pivot_row = next((i for i in range(r, nrows) if a[i][c] != 0), -1)
        if pivot_row < 0:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        piv = a[r][c]
        a[r] = [x / piv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def kernel_basis(rows, ncols: int):
    """Basis of the right kernel of the matrix (rows over ncols columns).

    Returns a list of length-ncols Fraction vectors.
    """
    red, pivots = rref(rows)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def solve(rows, rhs):
    """One solution x of A x = b over Fraction, or None if inconsistent."""
    if not rows:
        return [] if all(x == 0 for x in rhs) else None
    ncols = len(rows[0])
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    for r, pc in enumerate(pivots):
        if pc == ncols:
            return None
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return x


def invert(rows):
    """Inverse of a square Fraction matrix, or None if singular."""
    n = len(rows)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(rows)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in red[:n]]


def mat_mul(a, b):
    """Product of two dense matrices (lists of rows)."""
    if not a or not b:
        return []
    n, k, m = len(a), len(b), len(b[0])
    out = [[Fraction(0)] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            x = ai[t]
            if x:
                bt = b[t]
                for j in range(m):
                    if bt[j]:
                        oi[j] += x * bt[j]
    return out


def det(rows) -> Fraction:
    """Determinant of a square matrix over Fraction (Bareiss)."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    a = [[Fraction(x) for x in row] for row in rows]
    sign = 1
    prev = Fraction(1)
    for c in range(n - 1):
        pivot_row = next((i for i in range(c, n) if a[i][c] != 0), -1)
        if pivot_row < 0:
            return Fraction(0)
        if pivot_row != c:
            a[c], a[pivot_row] = a[pivot_row], a[c]
            sign = -sign
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                a[i][j] = (a[c][c] * a[i][j] - a[i][c] * a[c][j]) / prev
        prev = a[c][c]
    return sign * a[n - 1][n - 1]
