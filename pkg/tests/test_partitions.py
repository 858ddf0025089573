import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from detsing.partitions import (EMPTY, Partition, conjugate, convex_squares,
                                drop_column, drop_row, hook_content_bound,
                                partitions_of, rim_hook_extensions,
                                rim_hook_extensions_bruteforce, schur_dim,
                                schur_dim_weyl)


@st.composite
def small_partitions(draw):
    parts = draw(st.lists(st.integers(1, 8), max_size=8))
    return Partition(tuple(sorted(parts, reverse=True)))


@settings(max_examples=200, deadline=None)
@given(small_partitions())
def test_conjugate_involution(alpha):
    assert conjugate(conjugate(alpha)) == alpha
    assert conjugate(alpha).size() == alpha.size()


def test_conjugate_fixtures():
    assert conjugate(Partition.of(4, 2, 1)) == Partition.of(3, 2, 1, 1)
    assert conjugate(EMPTY) == EMPTY
    assert conjugate(Partition.of(5)) == Partition.of(1, 1, 1, 1, 1)


def test_convex_squares_421():
    sqs = convex_squares(Partition.of(4, 2, 1))
    assert [(s.row, s.col) for s in sqs] == [(1, 4), (2, 2), (3, 1)]
    assert [(s.row, s.col) for s in convex_squares(Partition.of(7))] == [(1, 7)]
    assert [(s.row, s.col) for s in convex_squares(Partition.of(2, 2))] == [(2, 2)]


def test_drops_421():
    alpha = Partition.of(4, 2, 1)
    pairs = [(drop_column(alpha, s.col), drop_row(alpha, s.row))
             for s in convex_squares(alpha)]
    assert pairs == [
        (Partition.of(3, 2, 1), Partition.of(2, 1)),
        (Partition.of(3, 1, 1), Partition.of(4, 1)),
        (Partition.of(3, 1), Partition.of(4, 2)),
    ]
    assert drop_row(Partition.of(7), 1) == EMPTY
    assert drop_column(Partition.of(2, 2), 2) == Partition.of(1, 1)


def test_drop_rejects_nonconvex():
    with pytest.raises(ValueError):
        drop_row(Partition.of(2, 2), 1)
    with pytest.raises(ValueError):
        drop_column(Partition.of(4, 2), 3)


@settings(max_examples=150, deadline=None)
@given(small_partitions())
def test_drop_sizes(alpha):
    conj = conjugate(alpha)
    for sq in convex_squares(alpha):
        assert drop_column(alpha, sq.col).size() == \
            alpha.size() - conj.part(sq.col)
        assert drop_row(alpha, sq.row).size() == alpha.size() - alpha.part(sq.row)


def test_rim_hooks_of_empty():
    # hooks of size m over all end rows sweep out (m-k, 1^k), k=0..m-1
    for m in range(1, 6):
        shapes = set()
        for row in range(1, m + 1):
            for beta in rim_hook_extensions(EMPTY, m, row):
                shapes.add(beta.parts)
        assert shapes == {(m - k,) + (1,) * k for k in range(m)}
    # with the end row fixed there is exactly one hook (or none)
    assert rim_hook_extensions(EMPTY, 3, 2) == [Partition.of(2, 1)]
    assert rim_hook_extensions(EMPTY, 1, 3) == []


def test_rim_hook_single_box():
    alpha = Partition.of(2, 1)
    assert rim_hook_extensions(alpha, 1, 2) == [Partition.of(2, 2)]
    assert rim_hook_extensions(alpha, 1, 3) == [Partition.of(2, 1, 1)]


def test_rim_hooks_match_bruteforce():
    rng = random.Random(0)
    pool = [EMPTY] + [p for s in range(1, 8)
                      for p in partitions_of(s, max_rows=5, max_cols=5)]
    for _ in range(300):
        alpha = rng.choice(pool)
        s, m = rng.randint(1, 5), rng.randint(1, 6)
        got = sorted(p.parts for p in rim_hook_extensions(alpha, s, m))
        want = sorted(p.parts for p in rim_hook_extensions_bruteforce(alpha, s, m))
        assert got == want, (alpha, s, m)


def test_schur_dims():
    for n in range(0, 7):
        assert schur_dim(Partition.of(1), n) == n
        assert schur_dim(Partition.of(1, 1), n) == n * (n - 1) // 2
    assert schur_dim(Partition.of(2, 1), 3) == 8
    assert schur_dim(EMPTY, 5) == 1
    assert schur_dim(Partition.of(1, 1, 1), 2) == 0


def test_schur_vs_weyl():
    for alpha in [EMPTY] + [p for s in range(1, 9)
                            for p in partitions_of(s, max_rows=4, max_cols=4)]:
        for n in range(0, 7):
            assert schur_dim(alpha, n) == schur_dim_weyl(alpha, n), (alpha, n)


def test_cauchy_identity():
    for m in range(1, 6):
        for n in range(1, 6):
            for s in range(0, 7):
                assert hook_content_bound(m, n, s) == comb(m * n, s)
