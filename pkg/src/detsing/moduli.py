"""Finite-dimensional representations of the doubled quiver over Q.

A point is a pair (alpha, beta): alpha a split monomorphism from a
rank-(m-1) space P into F, beta any map P^v -> G^v.  The associated
representation puts the exterior powers of P^v at the vertices, lets
the downward arrows wedge with alpha^v(lambda) and the upward arrows
contract with beta^v(g); the anticommutators then act by the scalars of
the m x n matrix alpha . beta^T, which always has rank <= m - 1 (its
maximal minors vanish: such points live on the determinantal locus).
Simplicity is equivalent to beta being injective, equivalently to that
matrix having rank exactly m - 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .linalg import invert, mat_mul, rank_dense, rref, solve


def _mat(rows):
    return [[Fraction(x) for x in row] for row in rows]


def _zeros(r, c):
    return [[Fraction(0)] * c for _ in range(r)]


def _transpose(a):
    return [list(col) for col in zip(*a)] if a else []


@dataclass
class ModuliPoint:
    """alpha: m x (m-1) over Q with a left inverse; beta: n x (m-1)."""

    m: int
    n: int
    alpha: list
    beta: list

    def __post_init__(self):
        self.alpha = _mat(self.alpha)
        self.beta = _mat(self.beta)
        if len(self.alpha) != self.m or any(len(r) != self.m - 1 for r in self.alpha):
            raise ValueError("alpha must be m x (m-1)")
        if len(self.beta) != self.n or any(len(r) != self.m - 1 for r in self.beta):
            raise ValueError("beta must be n x (m-1)")

    def alpha_rank(self) -> int:
        return rank_dense(self.alpha) if self.m > 1 else 0

    def is_split(self) -> bool:
        return self.alpha_rank() == self.m - 1


@dataclass
class QuiverRep:
    """Vertex spaces W_1..W_m and arrow matrices.

    lam[(i, a)] is the matrix of lambda_i : W_a -> W_{a-1} (2 <= a <= m),
    g[(j, a)] of g_j : W_a -> W_{a+1} (1 <= a <= m-1); matrices act on
    column vectors, stored as lists of rows.
    """

    m: int
    n: int
    dims: list
    lam: dict
    g: dict

    def vertex_dim(self, a: int) -> int:
        return self.dims[a - 1]


def _subsets(m1: int, size: int):
    return list(itertools.combinations(range(1, m1 + 1), size))


def build_rep(pt: ModuliPoint) -> QuiverRep:
    """The representation attached to a point; requires alpha split."""
    if not pt.is_split():
        raise ValueError("alpha is not a split monomorphism")
    m, n = pt.m, pt.n
    m1 = m - 1
    bases = {a: _subsets(m1, m - a) for a in range(1, m + 1)}
    dims = [len(bases[a]) for a in range(1, m + 1)]
    lam = {}
    g = {}
    for a in range(2, m + 1):
        src, tgt = bases[a], bases[a - 1]
        pos = {T: k for k, T in enumerate(tgt)}
        for i in range(1, m + 1):
            mat = _zeros(len(tgt), len(src))
            for ci, T in enumerate(src):
                for k in range(1, m1 + 1):
                    if k in T:
                        continue
                    coeff = pt.alpha[i - 1][k - 1]
                    if not coeff:
                        continue
                    newset = tuple(sorted(T + (k,)))
                    sign = -1 if sum(1 for y in T if y < k) % 2 else 1
                    mat[pos[newset]][ci] += sign * coeff
            lam[(i, a)] = mat
    for a in range(1, m):
        src, tgt = bases[a], bases[a + 1]
        pos = {T: k for k, T in enumerate(tgt)}
        for j in range(1, n + 1):
            mat = _zeros(len(tgt), len(src))
            for ci, T in enumerate(src):
                for p, k in enumerate(T):
                    coeff = pt.beta[j - 1][k - 1]
                    if not coeff:
                        continue
                    rest = T[:p] + T[p + 1:]
                    sign = -1 if p % 2 else 1
                    mat[pos[rest]][ci] += sign * coeff
            g[(j, a)] = mat
    return QuiverRep(m, n, dims, lam, g)


def associated_matrix(pt: ModuliPoint):
    """The m x n matrix alpha . beta^T and its rank."""
    a = mat_mul(pt.alpha, _transpose(pt.beta)) if pt.m > 1 else _zeros(pt.m, pt.n)
    if pt.m == 1:
        a = _zeros(1, pt.n)
    return a, (rank_dense(a) if a and a[0] else 0)


def scalar_matrix(rep: QuiverRep):
    """Recover the x_ij scalars from the action on the last vertex."""
    m, n = rep.m, rep.n
    a = _zeros(m, n)
    if m == 1:
        return a
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            comp = mat_mul(rep.g[(j, m - 1)], rep.lam[(i, m)])
            a[i - 1][j - 1] = comp[0][0]
    return a


def check_relations(rep: QuiverRep):
    """All violated relations, as human-readable tags; empty iff valid."""
    m, n = rep.m, rep.n
    bad = []
    scal = scalar_matrix(rep)

    def is_zero(mat):
        return all(all(x == 0 for x in row) for row in mat)

    def add(x, y):
        return [[p + q for p, q in zip(r1, r2)] for r1, r2 in zip(x, y)]

    for a in range(3, m + 1):
        for i in range(1, m + 1):
            for j in range(1, m + 1):
                s = add(mat_mul(rep.lam[(i, a - 1)], rep.lam[(j, a)]),
                        mat_mul(rep.lam[(j, a - 1)], rep.lam[(i, a)]))
                if not is_zero(s):
                    bad.append(f"lambda{i} lambda{j} anticommutator at vertex {a}")
    for a in range(1, m - 1):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                s = add(mat_mul(rep.g[(i, a + 1)], rep.g[(j, a)]),
                        mat_mul(rep.g[(j, a + 1)], rep.g[(i, a)]))
                if not is_zero(s):
                    bad.append(f"g{i} g{j} anticommutator at vertex {a}")
    for a in range(1, m + 1):
        for i in range(1, m + 1):
            for j in range(1, n + 1):
                d = rep.vertex_dim(a)
                total = _zeros(d, d)
                if a <= m - 1:
                    total = add(total, mat_mul(rep.lam[(i, a + 1)], rep.g[(j, a)]))
                if a >= 2:
                    total = add(total, mat_mul(rep.g[(j, a - 1)], rep.lam[(i, a)]))
                expect = [[scal[i - 1][j - 1] if r == c else Fraction(0)
                           for c in range(d)] for r in range(d)]
                if total != expect:
                    bad.append(f"x{i}{j} scalar relation at vertex {a}")
    return bad


def generated_from(rep: QuiverRep, vertex: int) -> bool:
    """Does the subrepresentation generated by W_vertex fill everything?"""
    m = rep.m
    spans = {a: [] for a in range(1, m + 1)}
    d = rep.vertex_dim(vertex)
    spans[vertex] = [[Fraction(int(r == c)) for c in range(d)] for r in range(d)]

    def dim_of(vectors):
        red, piv = rref(vectors)
        return len(red)

    changed = True
    while changed:
        changed = False
        for a in range(1, m + 1):
            vecs = spans[a]
            if not vecs:
                continue
            arrows = []
            if a >= 2:
                arrows += [(rep.lam[(i, a)], a - 1) for i in range(1, m + 1)]
            if a <= m - 1:
                arrows += [(rep.g[(j, a)], a + 1) for j in range(1, rep.n + 1)]
            for mat, b in arrows:
                before = dim_of(spans[b]) if spans[b] else 0
                new = spans[b] + [
                    [sum(row[k] * v[k] for k in range(len(v))) for row in mat]
                    for v in vecs
                ]
                after = dim_of(new)
                if after > before:
                    spans[b] = new
                    changed = True
    return all(dim_of(spans[a]) == rep.vertex_dim(a) for a in range(1, m + 1))


def reconstruct(rep: QuiverRep) -> ModuliPoint:
    """Read the point back off a representation generated by W_m.

    The gauge is P^v := W_{m-1}: alpha's i-th row is lambda_i . 1, and
    beta's j-th row is the matrix of g_j : W_{m-1} -> W_m.
    """
    m, n = rep.m, rep.n
    if rep.vertex_dim(m) != 1:
        raise ValueError("last vertex must be one-dimensional")
    if not generated_from(rep, m):
        raise ValueError("representation is not generated by the last vertex")
    bad = check_relations(rep)
    if bad:
        raise ValueError(f"relations fail: {bad[:3]}")
    alpha = [[Fraction(0)] * (m - 1) for _ in range(m)]
    beta = [[Fraction(0)] * (m - 1) for _ in range(n)]
    for i in range(1, m + 1):
        if m > 1:
            col = rep.lam[(i, m)]
            for k in range(m - 1):
                alpha[i - 1][k] = col[k][0]
    for j in range(1, n + 1):
        if m > 1:
            row = rep.g[(j, m - 1)]
            for k in range(m - 1):
                beta[j - 1][k] = row[0][k]
    return ModuliPoint(m, n, alpha, beta)


def gauge_fix(pt: ModuliPoint) -> ModuliPoint:
    """Normalize by the GL(P) gauge: make the first invertible
    (m-1) x (m-1) row block of alpha the identity."""
    m1 = pt.m - 1
    if m1 == 0:
        return ModuliPoint(pt.m, pt.n, pt.alpha, pt.beta)
    for rows in itertools.combinations(range(pt.m), m1):
        block = [pt.alpha[r] for r in rows]
        inv = invert(block)
        if inv is not None:
            alpha = mat_mul(pt.alpha, inv)
            beta = mat_mul(pt.beta, _transpose(block))
            return ModuliPoint(pt.m, pt.n, alpha, beta)
    raise ValueError("alpha is not split")


def rep_isomorphism(rep: QuiverRep, pt: ModuliPoint):
    """Explicit vertexwise isomorphism build_rep(pt) -> rep.

    Sends a basis wedge of P^v to the value of the corresponding
    lambda-word on the generator of W_m; returns the list of vertex
    matrices or None if some matrix fails to be invertible.
    """
    m = rep.m
    m1 = m - 1
    model = build_rep(pt)
    # lift each dual basis vector u^k of P^v through pi : F^v -> W_{m-1};
    # pi is (m-1) x m with columns indexed by lambda_i
    pi_rows = [[rep.lam[(i, m)][k][0] for i in range(1, m + 1)] for k in range(m1)]
    lifts = []
    for k in range(m1):
        e = [Fraction(int(t == k)) for t in range(m1)]
        c = solve(pi_rows, e)
        if c is None:
            return None
        lifts.append(c)

    def lam_combo(coeffs, a):
        d_src, d_tgt = rep.vertex_dim(a), rep.vertex_dim(a - 1)
        mat = _zeros(d_tgt, d_src)
        for i in range(1, m + 1):
            if coeffs[i - 1]:
                mi = rep.lam[(i, a)]
                for r in range(d_tgt):
                    for c in range(d_src):
                        mat[r][c] += coeffs[i - 1] * mi[r][c]
        return mat

    iso = {}
    ok = True
    for a in range(1, m + 1):
        basis = _subsets(m1, m - a)
        cols = []
        for T in basis:
            vec = [[Fraction(1)]]
            vertex = m
            for t in reversed(T):  # left-wedges pile up, so apply descending
                matx = lam_combo(lifts[t - 1], vertex)
                vec = mat_mul(matx, vec)
                vertex -= 1
            cols.append([row[0] for row in vec])
        mat = _transpose(cols)
        iso[a] = mat
        if rank_dense(mat) != rep.vertex_dim(a):
            ok = False
    return iso if ok else None


def is_simple(rep: QuiverRep) -> bool:
    """Simplicity criterion: the reconstructed beta is injective."""
    pt = reconstruct(rep)
    if pt.m == 1:
        return True
    return rank_dense(pt.beta) == pt.m - 1
