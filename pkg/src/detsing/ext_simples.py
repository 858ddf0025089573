"""Ext between graded simples, and Bott's algorithm on P^{m-1}.

Dimensions of Ext groups between the graded simple modules of the
endomorphism algebra are governed by convex squares of Young diagrams:
homological degree t collects the partitions of t + 1 inside the m x n
rectangle, each convex square (r, c) with c - r equal to the vertex
offset contributing the product of two Schur-module dimensions (column
drop against F, conjugated row drop against G).  Everything is
characteristic zero.

Bott flattening: add the staircase (m-1, ..., 1, 0) to an integral
weight; a repeated entry kills all cohomology, otherwise sorting by
adjacent swaps gives the unique surviving degree (the swap count) and
the dominant weight, whose dimension comes from the Weyl product
formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cohomology import direct_image
from .partitions import (Partition, conjugate, convex_squares, drop_column,
                         drop_row, partitions_of, schur_dim)


def bott_flatten(weight: tuple):
    """None if cohomology vanishes, else (degree, dominant weight)."""
    m = len(weight)
    rho = tuple(m - 1 - k for k in range(m))
    shifted = [w + r for w, r in zip(weight, rho)]
    if len(set(shifted)) < m:
        return None
    inversions = sum(
        1
        for i in range(m)
        for j in range(i + 1, m)
        if shifted[i] < shifted[j]
    )
    dominant = tuple(s - r for s, r in zip(sorted(shifted, reverse=True), rho))
    return inversions, dominant


def weyl_dim(weight: tuple) -> int:
    """Dimension of the irreducible GL representation with this highest
    weight (weakly decreasing integers, negatives allowed)."""
    n = len(weight)
    if any(a < b for a, b in zip(weight, weight[1:])):
        raise ValueError("weight is not dominant")
    num = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            num *= Fraction(weight[i] - weight[j] + j - i, j - i)
    assert num.denominator == 1
    return int(num)


@dataclass(frozen=True)
class ExtSummand:
    alpha: Partition
    row: int
    col: int
    col_drop: Partition       # paired with the m-dimensional side
    row_drop_conj: Partition  # paired with the n-dimensional side
    dim_f: int
    dim_g: int

    @property
    def dim(self) -> int:
        return self.dim_f * self.dim_g

    @property
    def twist(self) -> int:
        return self.col_drop.size() + (self.row_drop_conj.size())


def ext_dims(m: int, n: int, t: int, a: int, b: int):
    """Summands of Ext^t between the simples at vertices b and a.

    Enumerates partitions of t + 1 inside the m x n rectangle and keeps
    the convex squares with -a + b = -r + c.
    """
    if not (1 <= a <= m and 1 <= b <= m):
        raise ValueError(f"need 1 <= a,b <= m, got {(a, b)}")
    if t < 0:
        raise ValueError("t must be >= 0")
    out = []
    for alpha in partitions_of(t + 1, max_rows=m, max_cols=n):
        for sq in convex_squares(alpha):
            if -a + b != -sq.row + sq.col:
                continue
            cdrop = drop_column(alpha, sq.col)
            rdrop = drop_row(alpha, sq.row)
            out.append(
                ExtSummand(
                    alpha, sq.row, sq.col, cdrop, conjugate(rdrop),
                    schur_dim(cdrop, m), schur_dim(conjugate(rdrop), n),
                )
            )
    return out


def ext_total_dim(m: int, n: int, t: int, a: int, b: int) -> int:
    return sum(s.dim for s in ext_dims(m, n, t, a, b))


@dataclass(frozen=True)
class ResolutionEntry:
    vertex: int
    twist: int
    descriptor: str
    rank: int
    alpha: Partition
    row: int
    col: int


def simple_resolution_table(m: int, n: int, a: int, t_max: int):
    """Shape of the minimal graded resolution of the vertex-a simple.

    Homological degree t contributes, for each partition of t + 1 in
    the m x n rectangle and each convex square (r, c), a projective at
    vertex a - c + r, twisted by |column drop| + |row drop|, with
    multiplicity space L_{C}F^v (x) L_{R'}G; vertices outside [1, m]
    are silently suppressed.
    """
    if t_max < 0:
        raise ValueError("t_max must be >= 0")
    table = {}
    for t in range(t_max + 1):
        entries = []
        for alpha in partitions_of(t + 1, max_rows=m, max_cols=n):
            for sq in convex_squares(alpha):
                vertex = a - sq.col + sq.row
                if not (1 <= vertex <= m):
                    continue
                cdrop = drop_column(alpha, sq.col)
                rdrop = drop_row(alpha, sq.row)
                rank = schur_dim(cdrop, m) * schur_dim(conjugate(rdrop), n)
                twist = cdrop.size() + rdrop.size()
                desc = (
                    f"L_{cdrop.parts}F^v (x) L_{conjugate(rdrop).parts}G"
                )
                entries.append(
                    ResolutionEntry(vertex, twist, desc, rank, alpha,
                                    sq.row, sq.col)
                )
        table[t] = entries
    return table


def omega_weight(m: int, b: int, s: int) -> tuple:
    """The torus weight whose flattening computes H^*(P^{m-1}, O^b(s))."""
    if not (0 <= b <= m - 1):
        raise ValueError(f"need 0 <= b <= m-1, got b={b}")
    alpha = (1,) * (m - 1 - b) + (0,) * b
    return alpha + (b + 1 - s,)


def cohom_omega_crosscheck(m: int, b: int, s: int):
    """H^*(P^{m-1}, O^b(s)) computed twice; returns (degree, rank).

    Route one: Bott flattening of the tautological-quotient weight.
    Route two: the closed-form direct image with shifted parameters.
    A disagreement raises, it signals a bug in one of the routes.
    """
    flat = bott_flatten(omega_weight(m, b, s))
    if flat is None:
        bott_deg, bott_rank = None, 0
    else:
        bott_deg, bott_rank = flat[0], weyl_dim(flat[1])
    entry = direct_image(m, b + 1, m, b + 1 - s)
    di_deg = None if entry.vanishes else entry.nu
    di_rank = 0 if entry.vanishes else entry.rank
    if (bott_deg, bott_rank) != (di_deg, di_rank):
        raise AssertionError(
            f"cohomology routes disagree at (m={m}, b={b}, s={s}): "
            f"bott={(bott_deg, bott_rank)}, direct image={(di_deg, di_rank)}"
        )
    return bott_deg, bott_rank
