"""The quiverized Clifford algebra of the generic matrix.

Three computational models of the same object, cross-checking each
other:

* a star product on the exterior algebra A = L_S(F^v (+) G), computed
  through divided powers of the contraction operator D = sum x_ji
  d/dg_i (x) d/dlambda_j, so every intermediate is integral;
* a rewriting engine on path words of the doubly infinite quiver, with
  normal forms given by paths that first climb with g's and then
  descend with lambda's (or the reverse), and a quotient that discards
  basis paths leaving the vertex window [1, m];
* explicit minimal presentations of the graded pieces: block matrices
  whose entries are the divided-power operators, i.e. signed t x t
  minors of X, together with their characteristic-zero block
  diagonalization through a factorial Hankel form.

Normal form for monomials of A: g-block first, both blocks sorted
ascending; all signs below are relative to that convention.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .linalg import rank_dense
from .modules import (GradedFreeModule, IndexSet, PolyMatrix, free_module,
                      index_sets, lambda_F_module, lambda_G_module, minor)
from .poly import RingContext, SparsePoly

# ---------------------------------------------------------------------------
# exterior-monomial utilities


def _merge_sign(a: tuple, b: tuple):
    """Sign of sorting the concatenation a + b; None if they intersect."""
    if set(a) & set(b):
        return None
    inv = sum(1 for x in a for y in b if x > y)
    return -1 if inv % 2 else 1


def _contract_ascending(block: tuple, removed: tuple):
    """Sign of applying contractions by `removed` (ascending) to `block`."""
    cur = list(block)
    sign = 1
    for idx in removed:
        pos = cur.index(idx)
        if pos % 2:
            sign = -sign
        cur.pop(pos)
    return sign, tuple(cur)


class CliffordElement:
    """Element of L_S(F^v (+) G): dict (g-tuple, l-tuple) -> SparsePoly."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for key, p in terms.items():
                if p:
                    self.terms[key] = p

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def scalar(cls, p) -> "CliffordElement":
        if isinstance(p, (int, Fraction)):
            p = SparsePoly.const(p)
        return cls({((), ()): p})

    @classmethod
    def gen_g(cls, j: int) -> "CliffordElement":
        return cls({((j,), ()): SparsePoly.const(1)})

    @classmethod
    def gen_l(cls, i: int) -> "CliffordElement":
        return cls({((), (i,)): SparsePoly.const(1)})

    def __add__(self, other):
        res = dict(self.terms)
        for key, p in other.terms.items():
            s = res.get(key)
            q = p if s is None else s + p
            if q:
                res[key] = q
            else:
                res.pop(key, None)
        return CliffordElement(res)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "CliffordElement":
        return CliffordElement({k: p.scale(c) for k, p in self.terms.items()})

    def poly_scale(self, p: SparsePoly) -> "CliffordElement":
        return CliffordElement({k: q * p for k, q in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, CliffordElement) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def wedge(self, other: "CliffordElement") -> "CliffordElement":
        res = CliffordElement()
        out = {}
        for (g1, l1), p1 in self.terms.items():
            for (g2, l2), p2 in other.terms.items():
                sg = _merge_sign(g1, g2)
                if sg is None:
                    continue
                sl = _merge_sign(l1, l2)
                if sl is None:
                    continue
                # move the g2 block across the l1 block
                cross = -1 if (len(l1) * len(g2)) % 2 else 1
                key = (tuple(sorted(g1 + g2)), tuple(sorted(l1 + l2)))
                coeff = p1 * p2
                s = sg * sl * cross
                if s < 0:
                    coeff = -coeff
                cur = out.get(key)
                out[key] = coeff if cur is None else cur + coeff
        for key, p in out.items():
            if p:
                res.terms[key] = p
        return res

    def bidegrees(self):
        return sorted({(len(g), len(l)) for (g, l) in self.terms})

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for (g, l), p in sorted(self.terms.items()):
            word = "".join(f"g{j}" for j in g) + "".join(f"l{i}" for i in l)
            bits.append(f"({p})*{word or '1'}")
        return " + ".join(bits)


@lru_cache(maxsize=None)
def _minor_cached(ctx: RingContext, rows: tuple, cols: tuple) -> SparsePoly:
    return minor(ctx, IndexSet(rows, ctx.m), IndexSet(cols, ctx.n))


def _divided_contraction_terms(ctx: RingContext, t: int, key1, key2):
    """Terms of D^(t) applied to the pure tensor key1 (x) key2.

    Yields (coefficient SparsePoly, new_key1, new_key2).  The global
    sign is (-1)^(t*|u| + t(t-1)/2) with an extra (-1)^(t*|g-block of v|)
    from carrying the lambda-contractions across v's g block.
    """
    (g1, l1), (g2, l2) = key1, key2
    if t > min(len(g1), len(l2)):
        return
    base = t * (len(g1) + len(l1)) + t * (t - 1) // 2 + t * len(g2)
    base_sign = -1 if base % 2 else 1
    for cols in itertools.combinations(g1, t):
        sg, g1new = _contract_ascending(g1, cols)
        for rows in itertools.combinations(l2, t):
            sl, l2new = _contract_ascending(l2, rows)
            mnr = _minor_cached(ctx, rows, cols)
            s = base_sign * sg * sl
            coeff = mnr if s > 0 else -mnr
            yield coeff, (g1new, l1), (g2, l2new)


def star_multiply(ctx: RingContext, u: CliffordElement, v: CliffordElement
                  ) -> CliffordElement:
    """The Clifford product on A, as the alternating divided-power sum."""
    total = CliffordElement()
    for key1, p1 in u.terms.items():
        for key2, p2 in v.terms.items():
            p12 = p1 * p2
            tmax = min(len(key1[0]), len(key2[1]))
            for t in range(tmax + 1):
                for coeff, k1, k2 in _divided_contraction_terms(ctx, t, key1, key2):
                    piece = CliffordElement({k1: coeff if t % 2 == 0 else -coeff})
                    w = piece.wedge(CliffordElement({k2: SparsePoly.const(1)}))
                    total = total + w.poly_scale(p12)
    return total


def star_eval_word(ctx: RingContext, letters) -> CliffordElement:
    """Product of generator letters given in application order."""
    acc = CliffordElement.scalar(1)
    for kind, idx in letters:
        gen = CliffordElement.gen_g(idx) if kind == "g" else CliffordElement.gen_l(idx)
        acc = star_multiply(ctx, gen, acc)
    return acc


# ---------------------------------------------------------------------------
# divided-power matrices


@lru_cache(maxsize=None)
def bidegree_module(ctx: RingContext, q_g: int, q_l: int, twist: int
                    ) -> GradedFreeModule:
    """Free module L^{q_g}G (x) L^{q_l}F^v with the given internal twist."""
    gens = []
    for I in index_sets(q_g, ctx.n):
        for J in index_sets(q_l, ctx.m):
            gens.append(((I.entries, J.entries), twist))
    return free_module(gens)


@lru_cache(maxsize=None)
def delta_matrix(ctx: RingContext, t: int, q_g: int, q_l: int,
                 src_twist: int | None = None) -> PolyMatrix:
    """Matrix of D^(t) from bidegree (q_g, q_l) to (q_g - t, q_l - t).

    Entries are signed t x t minors of X.  Twists follow the G-degree
    convention (source q_g, target q_g - t) unless `src_twist` overrides
    the source twist, shifting the target accordingly.
    """
    if not (0 <= t <= min(q_g, q_l, ctx.m, ctx.n)):
        raise ValueError(f"divided power t={t} out of range for ({q_g},{q_l})")
    stw = q_g if src_twist is None else src_twist
    src = bidegree_module(ctx, q_g, q_l, stw)
    tgt = bidegree_module(ctx, q_g - t, q_l - t, stw - t)
    tgt_pos = {lab: k for k, (lab, _) in enumerate(tgt.gens)}
    entries = {}
    for ci, ((I0, J0), _) in enumerate(src.gens):
        key1 = (I0, ())
        key2 = ((), J0)
        for coeff, k1, k2 in _divided_contraction_terms(ctx, t, key1, key2):
            ri = tgt_pos[(k1[0], k2[1])]
            cur = entries.get((ri, ci))
            entries[(ri, ci)] = coeff if cur is None else cur + coeff
    return PolyMatrix(src, tgt, entries)


def delta_power_matrix(ctx: RingContext, t: int, q_g: int, q_l: int) -> PolyMatrix:
    """(1/t!) (D-matrix)^t, the independent route to the same operator."""
    mat = PolyMatrix.identity(bidegree_module(ctx, q_g, q_l, q_g))
    for k in range(t):
        step = delta_matrix(ctx, 1, q_g - k, q_l - k,
                            src_twist=q_g - k)
        mat = step.compose(mat)
    return mat.scale(Fraction(1, factorial(t)))


# ---------------------------------------------------------------------------
# path words and PBW normal forms


@dataclass(frozen=True)
class PathWord:
    """A path of the (doubly infinite) doubled quiver.

    `steps` are given in application order: ('g', j) increments the
    vertex, ('l', i) decrements it."""

    start: int
    steps: tuple

    @property
    def end(self) -> int:
        return self.start + sum(1 if k == "g" else -1 for k, _ in self.steps)

    def vertices(self):
        v = self.start
        out = [v]
        for kind, _ in self.steps:
            v += 1 if kind == "g" else -1
            out.append(v)
        return out


def _normalize_words(ctx: RingContext, start: int, terms: dict, g_first: bool):
    """Rewrite {word: poly} into normal form words.

    Normal form (g_first): all g-steps before all l-steps, g's strictly
    descending, l's strictly ascending (in application order); the
    mirror form puts l's first (descending), then g's (ascending)."""
    x = SparsePoly.variable
    done: dict = {}
    work = dict(terms)
    while work:
        word, coeff = work.popitem()
        if not coeff:
            continue
        idx = _first_violation(word, g_first)
        if idx is None:
            cur = done.get(word)
            q = coeff if cur is None else cur + coeff
            if q:
                done[word] = q
            else:
                done.pop(word, None)
            continue
        (k1, i1), (k2, i2) = word[idx], word[idx + 1]
        rest_pre, rest_post = word[:idx], word[idx + 2:]
        if k1 == k2:
            if i1 == i2:
                continue  # square of a generator: zero
            swapped = rest_pre + ((k2, i2), (k1, i1)) + rest_post
            _accumulate(work, swapped, -coeff)
        else:
            # mixed pair in the wrong order: apply the Clifford relation
            lam, g = (i1, i2) if k1 == "l" else (i2, i1)
            shortened = rest_pre + rest_post
            swapped = rest_pre + ((k2, i2), (k1, i1)) + rest_post
            _accumulate(work, shortened, coeff * x(lam, g))
            _accumulate(work, swapped, -coeff)
    return done


def _accumulate(d: dict, key, val):
    cur = d.get(key)
    q = val if cur is None else cur + val
    if q:
        d[key] = q
    else:
        d.pop(key, None)


def _first_violation(word, g_first: bool):
    for k in range(len(word) - 1):
        (k1, i1), (k2, i2) = word[k], word[k + 1]
        if k1 == k2:
            if k1 == "g":
                asc_ok = (i1 > i2) if g_first else (i1 < i2)
            else:
                asc_ok = (i1 < i2) if g_first else (i1 > i2)
            if not asc_ok:
                return k
        else:
            if g_first and k1 == "l":
                return k
            if not g_first and k1 == "g":
                return k
    return None


def pbw_expand(ctx: RingContext, word: PathWord, ordering: str = "right-first"):
    """Expand a word in the PBW basis of the infinite quiverization.

    Returns {(start, g-index-set, l-index-set): SparsePoly}; for
    'right-first' the basis paths climb with all their g's before
    descending, for 'left-first' the mirror.  Coefficients do not
    depend on the rewriting order (confluence; tested, not assumed).
    """
    if ordering not in ("right-first", "left-first"):
        raise ValueError(f"unknown ordering {ordering!r}")
    g_first = ordering == "right-first"
    normal = _normalize_words(
        ctx, word.start, {tuple(word.steps): SparsePoly.const(1)}, g_first
    )
    out = {}
    for w, coeff in normal.items():
        gset = tuple(sorted(i for k, i in w if k == "g"))
        lset = tuple(sorted(i for k, i in w if k == "l"))
        out[(word.start, gset, lset)] = coeff
    return out


def pbw_key_word(key, ordering: str = "right-first") -> PathWord:
    """The canonical word of a PBW basis key."""
    start, gset, lset = key
    if ordering == "right-first":
        steps = tuple(("g", j) for j in sorted(gset, reverse=True)) + tuple(
            ("l", i) for i in sorted(lset)
        )
    else:
        steps = tuple(("l", i) for i in sorted(lset, reverse=True)) + tuple(
            ("g", j) for j in sorted(gset)
        )
    return PathWord(start, steps)


def quotient_to_C(ctx: RingContext, expansion: dict, ordering: str = "right-first"):
    """Drop PBW basis paths that leave the vertex window [1, m]."""
    out = {}
    for (start, gset, lset), coeff in expansion.items():
        if ordering == "right-first":
            peak = start + len(gset)
            if peak > ctx.m:
                continue
        else:
            valley = start - len(lset)
            if valley < 1:
                continue
        out[(start, gset, lset)] = coeff
    return out


# ---------------------------------------------------------------------------
# minimal presentations of the graded pieces


@dataclass(frozen=True)
class Presentation:
    """Minimal S-free presentation P1 --rho--> P0 of a graded piece."""

    m: int
    n: int
    a: int
    b: int
    p1_blocks: tuple  # (l, q_g, q_l) per block
    p0_blocks: tuple  # (k, q_g, q_l) per block
    rho: PolyMatrix

    @property
    def p0(self) -> GradedFreeModule:
        return self.rho.target

    @property
    def p1(self) -> GradedFreeModule:
        return self.rho.source


def normalize_ab(m: int, a: int, b: int):
    """Apply the vertex involution until a + b >= m + 1."""
    if not (1 <= a <= m and 1 <= b <= m):
        raise ValueError(f"need 1 <= a,b <= m, got {(a, b)}")
    if a + b < m + 1:
        return m + 1 - b, m + 1 - a
    return a, b


def presentation(ctx: RingContext, a: int, b: int) -> Presentation:
    """Presentation of the (a, b) graded piece of the algebra.

    Blocks of P0 are indexed by k in [max(a,b), m], blocks of P1 by l in
    [max(a,b) - m, 0]; the (l, k) entry is the divided power of order
    a + b - k - l.  All entries have positive degree exactly because
    a + b >= m + 1 (minimality).
    """
    m, n = ctx.m, ctx.n
    a, b = normalize_ab(m, a, b)
    kmin = max(a, b)
    p0_blocks = tuple((k, k - a, k - b) for k in range(kmin, m + 1))
    p1_blocks = tuple((l, b - l, a - l) for l in range(kmin - m, 1))

    p0_gens = []
    p0_offsets = {}
    for (k, qg, ql) in p0_blocks:
        p0_offsets[k] = len(p0_gens)
        mod = bidegree_module(ctx, qg, ql, qg)
        p0_gens.extend(((("P0", k) + lab, tw) for lab, tw in mod.gens))
    p1_gens = []
    p1_offsets = {}
    for (l, qg, ql) in p1_blocks:
        p1_offsets[l] = len(p1_gens)
        mod = bidegree_module(ctx, qg, ql, qg)
        p1_gens.extend(((("P1", l) + lab, tw) for lab, tw in mod.gens))

    p0 = free_module(p0_gens)
    p1 = free_module(p1_gens)
    entries = {}
    for (l, qg1, ql1) in p1_blocks:
        for (k, qg0, ql0) in p0_blocks:
            t = a + b - k - l
            if t < 0:
                continue
            blk = delta_matrix(ctx, t, qg1, ql1)
            roff, coff = p0_offsets[k], p1_offsets[l]
            for (r, c), p in blk.entries.items():
                entries[(roff + r, coff + c)] = p
    rho = PolyMatrix(p1, p0, entries)
    return Presentation(m, n, a, b, p1_blocks, p0_blocks, rho)


def presentation_hilbert(ctx: RingContext, pres: Presentation, d: int) -> int:
    """Hilbert function of cok(rho) at internal degree d."""
    return pres.p0.piece_dim(ctx, d) - pres.rho.piece_rank(ctx, d)


def cokernel_rank_at_point(pres: Presentation, point: dict) -> int:
    """Rank of the cokernel of rho after evaluating at a point."""
    rows = [
        [pres.rho.entry(r, c).evaluate(point) for c in range(pres.p1.rank)]
        for r in range(pres.p0.rank)
    ]
    rk = rank_dense(rows) if rows and rows[0] else 0
    return pres.p0.rank - rk


# ---------------------------------------------------------------------------
# characteristic-zero block decomposition


def hankel_factorial_det(u: int, t: int) -> Fraction:
    """det of the t x t matrix with entries 1/(u - i - j)! (1-based)."""
    if u < 2 * t:
        raise ValueError(f"need u >= 2t, got u={u}, t={t}")
    from .linalg import det
    rows = [
        [Fraction(1, factorial(u - i - j)) for j in range(1, t + 1)]
        for i in range(1, t + 1)
    ]
    value = det(rows)
    if value == 0:
        raise AssertionError("factorial Hankel determinant vanished")
    return value


def symmetric_diagonalize(a_rows):
    """Write a symmetric matrix as P D P^T, P unit upper triangular.

    Diagonalization runs from the last variable, so the pivots are the
    trailing principal minors' ratios; a singular trailing minor raises.
    """
    n = len(a_rows)
    a = [[Fraction(x) for x in row] for row in a_rows]
    for i in range(n):
        for j in range(n):
            if a[i][j] != a[j][i]:
                raise ValueError("matrix is not symmetric")
    p = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    d = [Fraction(0)] * n
    for j in range(n - 1, -1, -1):
        pivot = a[j][j] - sum(p[j][k] * p[j][k] * d[k] for k in range(j + 1, n))
        if pivot == 0:
            raise ValueError("singular trailing principal minor")
        d[j] = pivot
        for i in range(j - 1, -1, -1):
            num = a[i][j] - sum(p[i][k] * p[j][k] * d[k] for k in range(j + 1, n))
            p[i][j] = num / pivot
    return p, d


@dataclass(frozen=True)
class Block:
    alpha: int
    beta: int
    scale: Fraction
    map: PolyMatrix  # the divided power of order m - alpha - beta


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple
    p_left: PolyMatrix
    diag: PolyMatrix
    p_right: PolyMatrix


def block_decomposition(ctx: RingContext, a: int, b: int) -> BlockDecomposition:
    """Split the (a, b) piece into its exterior-power summands (char 0).

    Returns the diagonal divided-power blocks together with the unit
    block-triangular transforms realizing rho = P_left . diag . P_right;
    the reconstruction is exact and asserted."""
    m = ctx.m
    a, b = normalize_ab(m, a, b)
    pres = presentation(ctx, a, b)
    kmin = max(a, b)
    nblocks = m - kmin + 1
    r = m - abs(a - b)
    hankel = [
        [Fraction(1, factorial(r - i - j)) for j in range(nblocks)]
        for i in range(nblocks)
    ]
    p, d = symmetric_diagonalize(hankel)

    # operator blocks: row blocks of P1 are indexed by l_i = kmin - m + i,
    # column blocks of P0 by k_i = kmin + i, i = 0..nblocks-1
    def p1_bidegree(i):
        l = kmin - m + i
        return b - l, a - l

    def p0_bidegree(i):
        k = kmin + i
        return k - a, k - b

    def assemble(blocks_entries, src_mods, tgt_mods):
        src_gens, tgt_gens = [], []
        src_off, tgt_off = [], []
        for mod in src_mods:
            src_off.append(len(src_gens))
            src_gens.extend(mod.gens)
        for mod in tgt_mods:
            tgt_off.append(len(tgt_gens))
            tgt_gens.extend(mod.gens)
        entries = {}
        for (bi, bj), mat in blocks_entries.items():
            for (rr, cc), pol in mat.entries.items():
                entries[(tgt_off[bi] + rr, src_off[bj] + cc)] = pol
        return PolyMatrix(free_module(src_gens), free_module(tgt_gens), entries)

    # middle: intermediate source/target spaces share the P1/P0 bidegrees
    mid_src = [bidegree_module(ctx, *p1_bidegree(i), p1_bidegree(i)[0]) for i in range(nblocks)]
    mid_tgt = [bidegree_module(ctx, *p0_bidegree(i), p0_bidegree(i)[0]) for i in range(nblocks)]

    diag_entries = {}
    blocks = []
    for i in range(nblocks):
        t = r - 2 * i
        mat = delta_matrix(ctx, t, *p1_bidegree(i))
        scale = d[i] * factorial(t)
        diag_entries[(i, i)] = mat.scale(scale)
        blocks.append(Block(kmin + i - a, kmin + i - b, scale, mat))
    diag = assemble(diag_entries, mid_src, mid_tgt)

    left_entries = {}
    for i in range(nblocks):
        for k in range(i, nblocks):
            if p[i][k] == 0:
                continue
            u = k - i
            mat = delta_matrix(ctx, u, *p0_bidegree(k))
            left_entries[(i, k)] = mat.scale(p[i][k] * factorial(u))
    p_left = assemble(left_entries, mid_tgt, [bidegree_module(ctx, *p0_bidegree(i), p0_bidegree(i)[0]) for i in range(nblocks)])

    right_entries = {}
    for k in range(nblocks):
        for j in range(k + 1):
            if p[j][k] == 0:
                continue
            u = k - j
            mat = delta_matrix(ctx, u, *p1_bidegree(j))
            right_entries[(k, j)] = mat.scale(p[j][k] * factorial(u))
    p_right = assemble(
        right_entries,
        [bidegree_module(ctx, *p1_bidegree(j), p1_bidegree(j)[0]) for j in range(nblocks)],
        mid_src,
    )

    recon = p_left.compose(diag).compose(p_right)
    if not _same_entries(recon, pres.rho):
        raise AssertionError("block decomposition failed to reconstruct rho")
    return BlockDecomposition(tuple(blocks), p_left, diag, p_right)


def _same_entries(x: PolyMatrix, y: PolyMatrix) -> bool:
    return x.entries == y.entries


# ---------------------------------------------------------------------------
# the Clifford action on the modules cok L^a phi


def _wedge_matrix(mod_subsets, bound: int, j: int):
    """Entries of (wedge with basis vector j) in sorted index bases."""
    entries = {}
    pos = {}
    for ri, R in enumerate(mod_subsets[1]):
        pos[R] = ri
    for ci, C in enumerate(mod_subsets[0]):
        if j in C:
            continue
        newset = tuple(sorted(C + (j,)))
        sign = -1 if sum(1 for x in C if x < j) % 2 else 1
        entries[(pos[newset], ci)] = sign
    return entries


def clifford_action_lifts(ctx: RingContext, a: int, generator):
    """Lifts (alpha on L.F, beta on L.G) of a Clifford generator.

    `generator` is ('l', i) or ('g', j).  For ('l', i): alpha is the
    contraction by the i-th coordinate on L^a F -> L^{a-1} F, beta the
    induced derivation on L^a G with linear entries.  For ('g', j):
    beta wedges with g_j, alpha wedges with the j-th column of X.  The
    squares with the exterior powers of X commute exactly.
    """
    m, n = ctx.m, ctx.n
    kind, idx = generator
    one = SparsePoly.const(1)
    x = SparsePoly.variable

    def f_mod(p):
        return lambda_F_module(ctx, p)

    def g_mod(p):
        return lambda_G_module(ctx, p)

    if kind == "l":
        if not (1 <= idx <= m):
            raise ValueError("lambda index out of range")
        src_f, tgt_f = f_mod(a), f_mod(a - 1)
        entries_f = {}
        tgt_pos = {g[0].entries: k for k, g in enumerate(tgt_f.gens)}
        for ci, (lab, _) in enumerate(src_f.gens):
            C = lab.entries
            if idx in C:
                sign, rest = _contract_ascending(C, (idx,))
                entries_f[(tgt_pos[rest], ci)] = one.scale(sign)
        alpha = PolyMatrix(src_f, tgt_f, entries_f)

        src_g, tgt_g = g_mod(a), g_mod(a - 1)
        entries_g = {}
        tposg = {g[0].entries: k for k, g in enumerate(tgt_g.gens)}
        for ci, (lab, _) in enumerate(src_g.gens):
            C = lab.entries
            for j in C:
                sign, rest = _contract_ascending(C, (j,))
                key = (tposg[rest], ci)
                cur = entries_g.get(key, SparsePoly.zero())
                entries_g[key] = cur + x(idx, j).scale(sign)
        beta = PolyMatrix(src_g, tgt_g, entries_g)
        return alpha, beta

    if kind == "g":
        if not (1 <= idx <= n):
            raise ValueError("g index out of range")
        src_g, tgt_g = g_mod(a), g_mod(a + 1)
        entries_g = {}
        tposg = {g[0].entries: k for k, g in enumerate(tgt_g.gens)}
        for ci, (lab, _) in enumerate(src_g.gens):
            C = lab.entries
            if idx in C:
                continue
            newset = tuple(sorted(C + (idx,)))
            sign = -1 if sum(1 for y in C if y < idx) % 2 else 1
            entries_g[(tposg[newset], ci)] = one.scale(sign)
        beta = PolyMatrix(src_g, tgt_g, entries_g)

        src_f, tgt_f = f_mod(a), f_mod(a + 1)
        entries_f = {}
        tposf = {g[0].entries: k for k, g in enumerate(tgt_f.gens)}
        for ci, (lab, _) in enumerate(src_f.gens):
            C = lab.entries
            for i in range(1, m + 1):
                if i in C:
                    continue
                newset = tuple(sorted(C + (i,)))
                sign = -1 if sum(1 for y in C if y < i) % 2 else 1
                key = (tposf[newset], ci)
                cur = entries_f.get(key, SparsePoly.zero())
                entries_f[key] = cur + x(i, idx).scale(sign)
        alpha = PolyMatrix(src_f, tgt_f, entries_f)
        return alpha, beta

    raise ValueError(f"unknown generator kind {kind!r}")
