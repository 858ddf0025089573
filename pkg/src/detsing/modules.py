"""Twist-labelled free S-modules and sparse polynomial matrices.

A `GradedFreeModule` is a finite list of generators, each carrying an
arbitrary hashable label and an internal-degree twist; the degree-d
graded piece has a basis (generator, monomial of degree d - twist).  A
`PolyMatrix` is a sparse matrix of `SparsePoly` entries between two such
modules; homogeneity means entry (r, c) has total degree
twist(source gen c) - twist(target gen r).

Graded-piece ranks are computed exactly: the scalar matrix of the map
on a degree piece is assembled sparsely and ranked by fraction-free
elimination (with connected-component splitting, see `linalg`).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .linalg import kernel_basis, rank_dense, rank_sparse, rref
from .poly import ONE_MONO, RingContext, SparsePoly, mono_degree, mono_mul


@dataclass(frozen=True)
class IndexSet:
    """Strictly increasing tuple of positive integers within a bound."""

    entries: tuple
    bound: int

    def __post_init__(self):
        if any(e < 1 or e > self.bound for e in self.entries):
            raise ValueError(f"indices {self.entries} out of range 1..{self.bound}")
        if any(a >= b for a, b in zip(self.entries, self.entries[1:])):
            raise ValueError(f"indices {self.entries} not strictly increasing")

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __repr__(self):
        return f"({','.join(map(str, self.entries))})"


def index_sets(size: int, bound: int):
    """All IndexSets of the given size inside 1..bound, lexicographic."""
    return [IndexSet(c, bound) for c in itertools.combinations(range(1, bound + 1), size)]


@dataclass(frozen=True)
class GradedFreeModule:
    """Free S-module with labelled, twisted generators."""

    gens: tuple  # of (label, twist)

    @property
    def rank(self) -> int:
        return len(self.gens)

    def twists(self):
        return [t for _, t in self.gens]

    def piece_basis(self, ctx: RingContext, d: int):
        """Basis of the degree-d piece: list of (gen index, monomial)."""
        out = []
        for gi, (_, tw) in enumerate(self.gens):
            for mono in ctx.monomials(d - tw):
                out.append((gi, mono))
        return out

    def piece_dim(self, ctx: RingContext, d: int) -> int:
        return sum(ctx.sym_dim(d - tw) for _, tw in self.gens)

    def direct_sum(self, other: "GradedFreeModule") -> "GradedFreeModule":
        return GradedFreeModule(self.gens + other.gens)


def free_module(labels_twists) -> GradedFreeModule:
    return GradedFreeModule(tuple(labels_twists))


class PolyMatrix:
    """Sparse matrix of polynomials between graded free modules."""

    __slots__ = ("source", "target", "entries")

    def __init__(self, source: GradedFreeModule, target: GradedFreeModule, entries=None):
        self.source = source
        self.target = target
        self.entries = {}
        if entries:
            for (r, c), p in entries.items():
                if p:
                    self.entries[(r, c)] = p

    # ---- basic algebra ---------------------------------------------------
    def entry(self, r: int, c: int) -> SparsePoly:
        return self.entries.get((r, c), SparsePoly.zero())

    def compose(self, other: "PolyMatrix") -> "PolyMatrix":
        """self o other (apply `other` first)."""
        if other.target.gens != self.source.gens:
            raise ValueError("composition shape mismatch")
        res: dict = {}
        by_row: dict = {}
        for (k, c), p in other.entries.items():
            by_row.setdefault(k, []).append((c, p))
        for (r, k), q in self.entries.items():
            for c, p in by_row.get(k, []):
                prod = q * p
                if prod:
                    key = (r, c)
                    s = res.get(key)
                    res[key] = prod if s is None else s + prod
        return PolyMatrix(other.source, self.target, res)

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        res = dict(self.entries)
        for key, p in other.entries.items():
            s = res.get(key)
            res[key] = p if s is None else s + p
        return PolyMatrix(self.source, self.target, res)

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        return self + other.scale(-1)

    def scale(self, c) -> "PolyMatrix":
        return PolyMatrix(
            self.source, self.target,
            {key: p.scale(c) for key, p in self.entries.items()},
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PolyMatrix)
            and self.source.gens == other.source.gens
            and self.target.gens == other.target.gens
            and self.entries == other.entries
        )

    def is_zero(self) -> bool:
        return not self.entries

    @classmethod
    def identity(cls, module: GradedFreeModule) -> "PolyMatrix":
        return cls(module, module,
                   {(i, i): SparsePoly.const(1) for i in range(module.rank)})

    def is_homogeneous(self) -> bool:
        for (r, c), p in self.entries.items():
            d = self.source.gens[c][1] - self.target.gens[r][1]
            if not p.is_homogeneous(d):
                return False
        return True

    # ---- graded pieces -----------------------------------------------------
    def piece_entries(self, ctx: RingContext, d: int):
        """Scalar matrix of the degree-d piece, as sparse triplets.

        Returns (entries {(row, col): Fraction}, row basis, col basis) where
        bases are lists of (gen index, monomial).
        """
        col_basis = self.source.piece_basis(ctx, d)
        row_basis = self.target.piece_basis(ctx, d)
        row_pos = {key: k for k, key in enumerate(row_basis)}
        out: dict = {}
        cols_of_gen: dict = {}
        for k, (gi, mono) in enumerate(col_basis):
            cols_of_gen.setdefault(gi, []).append((k, mono))
        for (r, c), p in self.entries.items():
            for k, mono in cols_of_gen.get(c, []):
                for pm, coeff in p.terms.items():
                    key = (r, mono_mul(pm, mono))
                    rk = row_pos.get(key)
                    if rk is None:
                        continue
                    cell = (rk, k)
                    s = out.get(cell, Fraction(0)) + coeff
                    if s:
                        out[cell] = s
                    else:
                        out.pop(cell, None)
        return out, row_basis, col_basis

    def piece_rank(self, ctx: RingContext, d: int) -> int:
        entries, rows, cols = self.piece_entries(ctx, d)
        return rank_sparse(entries, len(rows), len(cols))


def graded_piece_rank(M: PolyMatrix, ctx: RingContext, d: int) -> int:
    """Rank over Q of the map induced by M between degree-d pieces."""
    return M.piece_rank(ctx, d)


def evaluate_at_point(M: PolyMatrix, point: dict):
    """Evaluate all entries at a rational point; returns (rows, rank)."""
    rows = [
        [M.entry(r, c).evaluate(point) for c in range(M.source.rank)]
        for r in range(M.target.rank)
    ]
    rk = rank_dense(rows) if rows and rows[0] else 0
    return rows, rk


# ---- the generic matrix and its minors --------------------------------------

def generic_matrix(ctx: RingContext) -> PolyMatrix:
    """The m x n matrix X of indeterminates, as a map G(-1)^n -> F^m."""
    src = free_module(((IndexSet((j,), ctx.n), 1) for j in range(1, ctx.n + 1)))
    tgt = free_module(((IndexSet((i,), ctx.m), 0) for i in range(1, ctx.m + 1)))
    entries = {
        (i - 1, j - 1): SparsePoly.variable(i, j)
        for i in range(1, ctx.m + 1)
        for j in range(1, ctx.n + 1)
    }
    return PolyMatrix(src, tgt, entries)


def poly_det(rows) -> SparsePoly:
    """Determinant of a square matrix of SparsePoly, by Laplace expansion."""
    t = len(rows)
    if t == 0:
        return SparsePoly.const(1)
    if t == 1:
        return rows[0][0]
    total = SparsePoly.zero()
    for k in range(t):
        p = rows[0][k]
        if not p:
            continue
        sub = [[row[j] for j in range(t) if j != k] for row in rows[1:]]
        term = p * poly_det(sub)
        total = total + (term if k % 2 == 0 else -term)
    return total


def minor(ctx: RingContext, rows: IndexSet, cols: IndexSet) -> SparsePoly:
    """Unsigned t x t minor of X on the given rows and columns."""
    if len(rows) != len(cols):
        raise ValueError("minor needs equally many rows and columns")
    if rows.bound != ctx.m or cols.bound != ctx.n:
        raise ValueError("index sets out of range for this ring")
    grid = [[SparsePoly.variable(i, j) for j in cols] for i in rows]
    return poly_det(grid)


def exterior_power_map(M: PolyMatrix, a: int) -> PolyMatrix:
    """The induced map on a-th exterior powers, in sorted-index bases.

    Entry (R, C) is the a x a minor det M[R, C]; twists add up, so the
    exterior power of a homogeneous matrix stays homogeneous.
    """
    if a < 0 or a > min(M.source.rank, M.target.rank):
        raise ValueError(f"exterior power {a} out of range")
    src_cols = list(itertools.combinations(range(M.source.rank), a))
    tgt_rows = list(itertools.combinations(range(M.target.rank), a))

    def wedge_module(mod: GradedFreeModule, subsets) -> GradedFreeModule:
        gens = []
        for sub in subsets:
            labels = tuple(mod.gens[i][0] for i in sub)
            tw = sum(mod.gens[i][1] for i in sub)
            gens.append((labels, tw))
        return free_module(gens)

    src = wedge_module(M.source, src_cols)
    tgt = wedge_module(M.target, tgt_rows)
    entries = {}
    for ri, R in enumerate(tgt_rows):
        for ci, C in enumerate(src_cols):
            p = poly_det([[M.entry(r, c) for c in C] for r in R])
            if p:
                entries[(ri, ci)] = p
    return PolyMatrix(src, tgt, entries)


def lambda_F_module(ctx: RingContext, a: int) -> GradedFreeModule:
    """L^a F (x) S: generators in degree 0, labelled by row index sets."""
    if a < 0 or a > ctx.m:
        return free_module(())
    return free_module(((s, 0) for s in index_sets(a, ctx.m)))


def lambda_G_module(ctx: RingContext, a: int) -> GradedFreeModule:
    """L^a G (x) S: generators in degree a, labelled by column index sets."""
    if a < 0 or a > ctx.n:
        return free_module(())
    return free_module(((s, a) for s in index_sets(a, ctx.n)))


def exterior_generic(ctx: RingContext, a: int) -> PolyMatrix:
    """L^a of the generic map, L^a G(-a) -> L^a F, in canonical bases.

    Entry (R, C) is the a x a minor on rows R and columns C."""
    if not (0 <= a <= ctx.m):
        raise ValueError(f"exterior power {a} out of range")
    src = lambda_G_module(ctx, a)
    tgt = lambda_F_module(ctx, a)
    entries = {}
    for ri, (R, _) in enumerate(tgt.gens):
        for ci, (C, _) in enumerate(src.gens):
            p = minor(ctx, R, C)
            if p:
                entries[(ri, ci)] = p
    return PolyMatrix(src, tgt, entries)


# ---- degreewise kernels ------------------------------------------------------

def piece_kernel(M: PolyMatrix, ctx: RingContext, d: int):
    """Basis of the kernel of the degree-d piece of M.

    Returns (vectors, col_basis): each vector is a dict col-index ->
    Fraction over the basis (gen, monomial) of the source piece.
    Component splitting keeps the eliminations small.
    """
    entries, rows, cols = M.piece_entries(ctx, d)
    ncols = len(cols)
    touched_cols = {c for _, c in entries}
    vectors = [{c: Fraction(1)} for c in range(ncols) if c not in touched_cols]

    # group columns by connected component
    parent: dict = {}

    def find(x):
        root = x
        while parent.get(root, root) != root:
            root = parent[root]
        while parent.get(x, x) != x:
            parent[x], x = root, parent[x]
        return root

    for (r, c) in entries:
        rx, ry = find(("r", r)), find(("c", c))
        if rx != ry:
            parent[rx] = ry

    comps: dict = {}
    for (r, c), v in entries.items():
        comps.setdefault(find(("r", r)), []).append((r, c, v))

    for cells in comps.values():
        rids = sorted({r for r, _, _ in cells})
        cids = sorted({c for _, c, _ in cells})
        rpos = {r: k for k, r in enumerate(rids)}
        cpos = {c: k for k, c in enumerate(cids)}
        block = [[Fraction(0)] * len(cids) for _ in rids]
        for r, c, v in cells:
            block[rpos[r]][cpos[c]] = v
        for vec in kernel_basis(block, len(cids)):
            vectors.append({cids[k]: x for k, x in enumerate(vec) if x})
    return vectors, cols
