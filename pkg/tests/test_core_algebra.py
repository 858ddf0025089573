import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from detsing.linalg import rank_dense, rank_sparse
from detsing.modules import (IndexSet, evaluate_at_point, exterior_generic,
                             exterior_power_map, generic_matrix,
                             graded_piece_rank, minor, poly_det)
from detsing.poly import RingContext, SparsePoly


def rand_poly(rng, ctx, terms=3, deg=2):
    p = SparsePoly.zero()
    for _ in range(terms):
        q = SparsePoly.const(rng.randint(-4, 4))
        for _ in range(rng.randint(0, deg)):
            i = rng.randint(1, ctx.m)
            j = rng.randint(1, ctx.n)
            q = q * SparsePoly.variable(i, j)
        p = p + q
    return p


coeffs = st.integers(min_value=-6, max_value=6)


@st.composite
def polys(draw):
    ctx = RingContext(2, 2)
    terms = draw(st.lists(
        st.tuples(coeffs, st.integers(0, 2), st.integers(0, 2)), max_size=4))
    p = SparsePoly.zero()
    for c, e1, e2 in terms:
        q = SparsePoly.const(c)
        for _ in range(e1):
            q = q * SparsePoly.variable(1, 1)
        for _ in range(e2):
            q = q * SparsePoly.variable(2, 1)
        p = p + q
    return p


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_ring_laws(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


def test_generic_matrix_shapes():
    ctx = RingContext(2, 2)
    X = generic_matrix(ctx)
    assert X.entry(0, 0) == SparsePoly.variable(1, 1)
    assert X.entry(1, 1) == SparsePoly.variable(2, 2)
    assert X.is_homogeneous()
    assert generic_matrix(RingContext(1, 1)).source.rank == 1
    X23 = generic_matrix(RingContext(2, 3))
    names = {e for p in X23.entries.values() for e, _ in p.terms}
    assert len(X23.entries) == 6 and len(names) == 6


def test_minor_fixtures():
    ctx = RingContext(2, 2)
    x = SparsePoly.variable
    det = minor(ctx, IndexSet((1, 2), 2), IndexSet((1, 2), 2))
    assert det == x(1, 1) * x(2, 2) - x(1, 2) * x(2, 1)
    ctx23 = RingContext(2, 3)
    assert minor(ctx23, IndexSet((1,), 2), IndexSet((3,), 3)) == x(1, 3)
    assert minor(ctx23, IndexSet((1, 2), 2), IndexSet((1, 3), 3)) == \
        x(1, 1) * x(2, 3) - x(1, 3) * x(2, 1)


def laplace(ctx, rows, cols):
    # independent first-row Laplace expansion oracle
    if not rows:
        return SparsePoly.const(1)
    total = SparsePoly.zero()
    r0 = rows[0]
    for k, c in enumerate(cols):
        sub = laplace(ctx, rows[1:], cols[:k] + cols[k + 1:])
        term = SparsePoly.variable(r0, c) * sub
        total = total + (term if k % 2 == 0 else -term)
    return total


@pytest.mark.parametrize("m,n", [(3, 3), (3, 4)])
def test_minor_matches_laplace(m, n):
    import itertools
    ctx = RingContext(m, n)
    for t in range(1, 4):
        for rows in itertools.combinations(range(1, m + 1), t):
            for cols in itertools.combinations(range(1, n + 1), t):
                assert minor(ctx, IndexSet(rows, m), IndexSet(cols, n)) == \
                    laplace(ctx, list(rows), list(cols))


def test_exterior_power_respects_composition():
    rng = random.Random(5)
    from detsing.modules import PolyMatrix, free_module
    for size in (2, 3, 4):
        gens = tuple((k, 0) for k in range(size))
        mod = free_module(gens)
        A = PolyMatrix(mod, mod, {
            (i, j): SparsePoly.const(rng.randint(-3, 3))
            for i in range(size) for j in range(size)})
        B = PolyMatrix(mod, mod, {
            (i, j): SparsePoly.const(rng.randint(-3, 3))
            for i in range(size) for j in range(size)})
        for a in range(size + 1):
            lhs = exterior_power_map(A.compose(B), a)
            rhs = exterior_power_map(A, a).compose(exterior_power_map(B, a))
            assert lhs.entries == rhs.entries


def test_exterior_scalar_determinant():
    from detsing.modules import PolyMatrix, free_module
    mod = free_module(((0, 0), (1, 0)))
    D = PolyMatrix(mod, mod, {(0, 0): SparsePoly.const(2),
                              (1, 1): SparsePoly.const(3)})
    L2 = exterior_power_map(D, 2)
    assert L2.entry(0, 0) == SparsePoly.const(6)


def test_exterior_generic_top_is_maximal_minors():
    ctx = RingContext(2, 3)
    top = exterior_generic(ctx, 2)
    assert top.target.rank == 1 and top.source.rank == 3
    for ci, (C, _) in enumerate(top.source.gens):
        assert top.entry(0, ci) == minor(ctx, IndexSet((1, 2), 2), C)


def test_graded_piece_rank_fixtures():
    ctx = RingContext(2, 2)
    X = generic_matrix(ctx)
    assert graded_piece_rank(X, ctx, 1) == 2
    assert graded_piece_rank(X, ctx, 0) == 0  # empty source piece
    from detsing.modules import PolyMatrix
    Z = PolyMatrix(X.source, X.target, {})
    assert all(graded_piece_rank(Z, ctx, d) == 0 for d in range(3))


def test_graded_piece_rank_bounded():
    ctx = RingContext(2, 3)
    for a in (1, 2):
        M = exterior_generic(ctx, a)
        for d in range(5):
            r = graded_piece_rank(M, ctx, d)
            assert r <= min(M.source.piece_dim(ctx, d),
                            M.target.piece_dim(ctx, d))


def test_evaluate_at_point():
    ctx = RingContext(2, 2)
    X = generic_matrix(ctx)
    zero = {(i, j): Fraction(0) for i in (1, 2) for j in (1, 2)}
    assert evaluate_at_point(X, zero)[1] == 0
    rank1 = {(1, 1): Fraction(1), (1, 2): Fraction(2),
             (2, 1): Fraction(3), (2, 2): Fraction(6)}
    assert evaluate_at_point(X, rank1)[1] == 1
    assert evaluate_at_point(exterior_power_map(X, 2), rank1)[1] == 0
    generic = {(1, 1): Fraction(1), (1, 2): Fraction(0),
               (2, 1): Fraction(0), (2, 2): Fraction(1)}
    assert evaluate_at_point(X, generic)[1] == 2


def test_sparse_rank_matches_dense():
    rng = random.Random(17)
    for _ in range(40):
        nr, nc = rng.randint(1, 6), rng.randint(1, 6)
        rows = [[Fraction(rng.randint(-3, 3)) if rng.random() < 0.6 else
                 Fraction(0) for _ in range(nc)] for _ in range(nr)]
        entries = {(i, j): rows[i][j] for i in range(nr) for j in range(nc)
                   if rows[i][j]}
        assert rank_dense(rows) == rank_sparse(entries, nr, nc)


def test_poly_det_antisymmetry():
    ctx = RingContext(3, 3)
    x = SparsePoly.variable
    rows = [[x(i, j) for j in (1, 2, 3)] for i in (1, 2, 3)]
    swapped = [rows[1], rows[0], rows[2]]
    assert poly_det(swapped) == -poly_det(rows)
