"""Young-diagram combinatorics.

Partitions are weakly decreasing tuples of positive integers (no
trailing zeros).  A square (r, c) of the diagram is *convex* when it is
the last box of its row and the row below is strictly shorter; dropping
its row or its column again yields partitions.  Rim hooks (border
strips: connected skew shapes without a 2 x 2 square) drive the
cohomology bookkeeping, and Schur-module dimensions are semistandard
tableau counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb


@dataclass(frozen=True)
class Partition:
    parts: tuple

    def __post_init__(self):
        if any(p <= 0 for p in self.parts):
            raise ValueError("parts must be positive")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"{self.parts} is not weakly decreasing")

    @classmethod
    def of(cls, *parts) -> "Partition":
        return cls(tuple(p for p in parts if p))

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def size(self) -> int:
        return sum(self.parts)

    def part(self, r: int) -> int:
        """r-th part, 1-based, zero outside the diagram."""
        return self.parts[r - 1] if 1 <= r <= len(self.parts) else 0

    def fits_in(self, rows: int, cols: int) -> bool:
        """Containment in the rows x cols rectangle."""
        return len(self.parts) <= rows and (not self.parts or self.parts[0] <= cols)

    def __repr__(self):
        return f"Partition{self.parts}"


EMPTY = Partition(())


@dataclass(frozen=True)
class ConvexSquare:
    row: int
    col: int


def conjugate(alpha: Partition) -> Partition:
    if not alpha.parts:
        return EMPTY
    cols = []
    for c in range(1, alpha.parts[0] + 1):
        cols.append(sum(1 for p in alpha.parts if p >= c))
    return Partition(tuple(cols))


def convex_squares(alpha: Partition):
    """All squares (r, alpha_r) with alpha_{r+1} < alpha_r, by row."""
    out = []
    for r in range(1, len(alpha.parts) + 1):
        if alpha.part(r + 1) < alpha.part(r):
            out.append(ConvexSquare(r, alpha.part(r)))
    return out


def drop_row(alpha: Partition, r: int) -> Partition:
    _require_convex(alpha, r, alpha.part(r))
    parts = alpha.parts[: r - 1] + alpha.parts[r:]
    return Partition(parts)


def drop_column(alpha: Partition, c: int) -> Partition:
    rows = [r for r in range(1, len(alpha.parts) + 1) if alpha.part(r) == c
            and alpha.part(r + 1) < c]
    if not rows:
        raise ValueError(f"column {c} is not the column of a convex square of {alpha}")
    parts = tuple(p - 1 if p >= c else p for p in alpha.parts)
    return Partition(tuple(p for p in parts if p))


def _require_convex(alpha: Partition, r: int, c: int):
    if not (alpha.part(r) == c and alpha.part(r + 1) < c and c >= 1):
        raise ValueError(f"({r},{c}) is not a convex square of {alpha}")


def partitions_of(s: int, max_rows: int | None = None, max_cols: int | None = None):
    """All partitions of s inside the given rectangle, lexicographic."""
    out = []

    def rec(remaining, largest, acc):
        if remaining == 0:
            out.append(Partition(tuple(acc)))
            return
        if max_rows is not None and len(acc) >= max_rows:
            return
        for p in range(min(remaining, largest), 0, -1):
            rec(remaining - p, p, acc + [p])

    top = s if max_cols is None else min(s, max_cols)
    rec(s, top, [])
    return out


def _cells(alpha: Partition):
    return {(r, c) for r in range(1, len(alpha.parts) + 1)
            for c in range(1, alpha.part(r) + 1)}


def is_rim_hook(beta: Partition, alpha: Partition) -> bool:
    """Is beta - alpha a border strip (connected, no 2 x 2 square)?"""
    cells = _cells(beta) - _cells(alpha)
    if not cells or not _cells(alpha) <= _cells(beta):
        return False
    # no 2x2 square
    for (r, c) in cells:
        if {(r + 1, c), (r, c + 1), (r + 1, c + 1)} <= cells:
            return False
    # connectivity (edge-adjacency)
    seen = set()
    stack = [next(iter(cells))]
    while stack:
        cur = stack.pop()
        if cur in seen:
            continue
        seen.add(cur)
        r, c = cur
        for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if nb in cells and nb not in seen:
                stack.append(nb)
    return seen == cells


def rim_hook_extensions(alpha: Partition, s: int, m: int):
    """All beta >= alpha with beta - alpha a rim hook of length s whose
    lowest box lies in row m.

    A border strip on consecutive rows top..m is forced row by row: no
    2 x 2 square plus connectivity pin beta_{r+1} = alpha_r + 1, so only
    the top row's length is free.
    """
    if s < 1:
        raise ValueError("hook length must be >= 1")
    if m < 1:
        raise ValueError("row index must be >= 1")
    out = []
    for top in range(max(1, m - s + 1), m + 1):
        if top > len(alpha.parts) + 1:
            continue
        forced = sum(alpha.part(r) + 1 - alpha.part(r + 1) for r in range(top, m))
        head = s - forced
        if head < 1:
            continue
        parts = list(alpha.parts) + [0] * max(0, m - len(alpha.parts))
        parts[top - 1] = alpha.part(top) + head
        for r in range(top, m):
            parts[r] = alpha.part(r) + 1
        if top > 1 and parts[top - 1] > alpha.part(top - 1):
            continue
        beta = Partition(tuple(p for p in parts if p))
        if len(beta.parts) >= m:
            out.append(beta)
    return out


def rim_hook_extensions_bruteforce(alpha: Partition, s: int, m: int):
    """Exhaustive oracle: enumerate all partitions of |alpha| + s and
    filter by the skew-shape conditions directly."""
    out = []
    for beta in partitions_of(alpha.size() + s, max_rows=len(alpha.parts) + s):
        cells = _cells(beta) - _cells(alpha)
        if len(cells) != s or not _cells(alpha) <= _cells(beta):
            continue
        if max(r for (r, _) in cells) != m:
            continue
        if is_rim_hook(beta, alpha):
            out.append(beta)
    return out


@lru_cache(maxsize=None)
def _ssyt_count(shape: tuple, max_entry: int) -> int:
    """Number of semistandard Young tableaux, by row-filling recursion."""
    if not shape:
        return 1
    if len(shape) > max_entry:
        return 0

    # fill rows top to bottom; a row is a weakly increasing sequence with
    # entries > the row above (strict down columns)
    def rows_fill(row_len, lower_bounds, min_entry):
        # generate weakly increasing rows of length row_len with
        # row[i] >= lower_bounds[i] (strictness already folded in)
        def rec(i, prev):
            if i == row_len:
                yield ()
                return
            for v in range(max(prev, lower_bounds[i]), max_entry + 1):
                for rest in rec(i + 1, v):
                    yield (v,) + rest
        yield from rec(0, 1)

    total = 0
    first = shape[0]
    rest = shape[1:]

    def go(rows_above, shape_left):
        nonlocal total
        if not shape_left:
            total += 1
            return
        ln = shape_left[0]
        bounds = [rows_above[i] + 1 if i < len(rows_above) else 1 for i in range(ln)]
        for row in rows_fill(ln, bounds, 1):
            go(row, shape_left[1:])

    go((), shape)
    return total


def schur_dim(alpha: Partition, N: int) -> int:
    """dim of the Schur module L_alpha on an N-dimensional space."""
    if N < 0:
        raise ValueError("N must be >= 0")
    if not alpha.parts:
        return 1
    if len(alpha.parts) > N:
        return 0
    return _ssyt_count(alpha.parts, N)


def schur_dim_weyl(alpha: Partition, N: int) -> int:
    """Independent second route: the Weyl dimension product formula."""
    if len(alpha.parts) > N:
        return 0
    lam = list(alpha.parts) + [0] * (N - len(alpha.parts))
    num = Fraction(1)
    for i in range(N):
        for j in range(i + 1, N):
            num *= Fraction(lam[i] - lam[j] + j - i, j - i)
    assert num.denominator == 1
    return int(num)


def hook_content_bound(m: int, n: int, s: int) -> int:
    """Sum over |alpha| = s of dim L_alpha(K^m) * dim L_alpha'(K^n),
    which the Cauchy identity says equals C(m*n, s)."""
    total = 0
    for alpha in partitions_of(s, max_rows=m, max_cols=n):
        total += schur_dim(alpha, m) * schur_dim(conjugate(alpha), n)
    return total


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return comb(n, k)
