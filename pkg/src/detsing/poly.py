"""Sparse multivariate polynomials in the entries of a generic matrix.

The base ring is S = Q[x_ij], 1 <= i <= m, 1 <= j <= n, with every
variable in total degree 1.  Monomials are stored as sorted tuples of
((i, j), exponent) pairs; polynomials as monomial -> Fraction maps with
no zero coefficients.  Besides the total degree, every monomial carries
a multiweight (row degrees, column degrees) under the torus scaling
x_ij -> s_i t_j x_ij; all structural matrices in this package are
homogeneous for it, which is what makes exact graded linear algebra at
desk scale feasible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

Monomial = tuple  # tuple of ((i, j), exponent), sorted by variable

ONE_MONO: Monomial = ()


@dataclass(frozen=True)
class RingContext:
    """The shape (m, n) of the generic matrix, n >= m >= 1."""

    m: int
    n: int

    def __post_init__(self):
        if not (1 <= self.m <= self.n):
            raise ValueError(f"need 1 <= m <= n, got m={self.m}, n={self.n}")

    def variables(self):
        return [(i, j) for i in range(1, self.m + 1) for j in range(1, self.n + 1)]

    def sym_dim(self, d: int) -> int:
        """Dimension of the degree-d piece of S."""
        if d < 0:
            return 0
        from math import comb
        return comb(self.m * self.n + d - 1, d)

    def monomials(self, d: int):
        """All monomials of total degree d, in a fixed deterministic order."""
        if d < 0:
            return []
        if d == 0:
            return [ONE_MONO]
        out = []
        for combo in itertools.combinations_with_replacement(self.variables(), d):
            mono = []
            for v in combo:
                if mono and mono[-1][0] == v:
                    mono[-1] = (v, mono[-1][1] + 1)
                else:
                    mono.append((v, 1))
            out.append(tuple(mono))
        return out

    def monomials_of_multiweight(self, rows: tuple, cols: tuple):
        """Monomials with given row and column degree vectors.

        `rows` has m entries, `cols` has n entries; the result is the set
        of m x n exponent matrices with those margins.
        """
        if any(r < 0 for r in rows) or any(c < 0 for c in cols):
            return []
        if sum(rows) != sum(cols):
            return []
        m, n = self.m, self.n
        out = []

        def rec(i, cols_left, acc):
            if i == m:
                if all(c == 0 for c in cols_left):
                    out.append(tuple(acc))
                return
            # distribute rows[i] over the n columns, bounded by cols_left
            def dist(j, remaining, cl, row_acc):
                if j == n:
                    if remaining == 0:
                        rec(i + 1, cl, acc + row_acc)
                    return
                hi = min(remaining, cl[j])
                for e in range(hi + 1):
                    if e:
                        cl2 = list(cl)
                        cl2[j] -= e
                        dist(j + 1, remaining - e, cl2, row_acc + [((i + 1, j + 1), e)])
                    else:
                        dist(j + 1, remaining, cl, row_acc)

            dist(0, rows[i], list(cols_left), [])

        rec(0, list(cols), [])
        return out


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def mono_degree(a: Monomial) -> int:
    return sum(e for _, e in a)


def mono_multiweight(a: Monomial, m: int, n: int):
    rows = [0] * m
    cols = [0] * n
    for (i, j), e in a:
        rows[i - 1] += e
        cols[j - 1] += e
    return tuple(rows), tuple(cols)


class SparsePoly:
    """Element of S: dict monomial -> nonzero Fraction."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        self.terms = {mo: co for mo, co in terms.items() if co != 0}

    # ---- constructors -------------------------------------------------
    @classmethod
    def zero(cls) -> "SparsePoly":
        return cls()

    @classmethod
    def const(cls, c) -> "SparsePoly":
        c = Fraction(c)
        return cls({ONE_MONO: c}) if c else cls()

    @classmethod
    def variable(cls, i: int, j: int) -> "SparsePoly":
        return cls({(((i, j), 1),): Fraction(1)})

    # ---- ring operations ----------------------------------------------
    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        res = dict(self.terms)
        for mo, co in other.terms.items():
            s = res.get(mo, Fraction(0)) + co
            if s:
                res[mo] = s
            else:
                res.pop(mo, None)
        return SparsePoly(res)

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        return self + (-other)

    def __neg__(self) -> "SparsePoly":
        return SparsePoly({mo: -co for mo, co in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        res: dict = {}
        for mo1, co1 in self.terms.items():
            for mo2, co2 in other.terms.items():
                mo = mono_mul(mo1, mo2)
                s = res.get(mo, Fraction(0)) + co1 * co2
                if s:
                    res[mo] = s
                else:
                    res.pop(mo, None)
        return SparsePoly(res)

    __rmul__ = __mul__

    def scale(self, c) -> "SparsePoly":
        c = Fraction(c)
        if not c:
            return SparsePoly()
        return SparsePoly({mo: co * c for mo, co in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, SparsePoly) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # ---- structure -----------------------------------------------------
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_degree(mo) for mo in self.terms)

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = {mono_degree(mo) for mo in self.terms}
        if not degs:
            return True
        if len(degs) > 1:
            return False
        return d is None or degs == {d}

    def is_multihomogeneous(self, m: int, n: int):
        """The common multiweight of all terms, or None if mixed/zero."""
        wts = {mono_multiweight(mo, m, n) for mo in self.terms}
        if len(wts) == 1:
            return next(iter(wts))
        return None

    def coeff(self, mono: Monomial) -> Fraction:
        return self.terms.get(mono, Fraction(0))

    def evaluate(self, point: dict) -> Fraction:
        """Evaluate at a full assignment {(i, j): Fraction}."""
        total = Fraction(0)
        for mo, co in self.terms.items():
            v = co
            for var, e in mo:
                v *= point[var] ** e
            total += v
        return total

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for mo, co in sorted(self.terms.items()):
            vars_ = "*".join(
                f"x{i}{j}" + (f"^{e}" if e > 1 else "") for (i, j), e in mo
            )
            if not vars_:
                bits.append(str(co))
            elif co == 1:
                bits.append(vars_)
            elif co == -1:
                bits.append("-" + vars_)
            else:
                bits.append(f"{co}*{vars_}")
        return " + ".join(bits).replace("+ -", "- ")
