"""Shapes of minimal S-free resolutions of pushed-down hom bundles.

For twist parameters in the window where all higher direct images
vanish (c <= 0, or c = 1 with b = m, or c = 2 with (a, b) = (1, m),
after normalizing a + b >= m + 1), the pushdown admits a finite
projective resolution whose terms are assembled from exterior powers;
homological degrees run in [m - n - 1, 0] here and the projective
dimension follows an eight-row table.

Internal twists: a summand L^p F^v (x) L^q G sits in internal degree q
(the G side is generated in degree 1, the F side in degree 0).  Terms
built from a top higher direct image factor have no stated twist and
are reported as `twist=None`; the degreewise oracle can recover them.
"""

from __future__ import annotations

from dataclasses import dataclass
from .partitions import binomial as comb

from .cohomology import direct_image, dual_triple


@dataclass(frozen=True)
class Summand:
    rank: int
    descriptor: str
    twist: int | None


@dataclass(frozen=True)
class BettiTable:
    m: int
    n: int
    a: int
    b: int
    c: int
    rows: dict  # homological degree mu -> list of Summand

    def rank_at(self, mu: int) -> int:
        return sum(s.rank for s in self.rows.get(mu, []))

    def support(self):
        return sorted(self.rows)

    @property
    def amplitude(self) -> int:
        sup = self.support()
        return sup[-1] - sup[0] if sup else 0


def _normalize(m, n, a, b, c):
    if not (1 <= a <= m and 1 <= b <= m and m <= n):
        raise ValueError(f"need 1 <= a,b <= m <= n, got {(m, n, a, b)}")
    if a + b < m + 1:
        a, b, c = dual_triple(m, a, b, c)
    return a, b, c


def _in_vanishing_regime(m, a, b, c) -> bool:
    """Regime check in normalized coordinates (a + b >= m + 1)."""
    return c <= 0 or (c == 1 and b == m) or (c == 2 and a == 1 and b == m)


def resolution_shape(m: int, n: int, a: int, b: int, c: int) -> BettiTable:
    """Betti table of the pushdown at twist -c, from the five table rows."""
    a, b, c = _normalize(m, n, a, b, c)
    if not _in_vanishing_regime(m, a, b, c):
        raise ValueError(
            f"twist c={c} outside the resolution regime for (m,n,a,b)={(m, n, a, b)}"
        )
    rows: dict = {}

    def put(mu, rank, descriptor, twist):
        if rank > 0:
            rows.setdefault(mu, []).append(Summand(rank, descriptor, twist))

    # top-direct-image terms, mu <= c - 2
    for mu in range(max(m - n - 1, -n), min(m - 1, c - 2) + 1):
        r = direct_image(m, a, b, c - mu + m - 1).rank
        put(
            mu,
            r * comb(n, m - 1 - mu),
            f"R^{m - 1}pi_*(tw {mu - m + 1 - c}) (x) L^{m - 1 - mu}G",
            None,
        )
    # mu = c - 1
    for k in range(0, min(m - a, m - b) + 1):
        put(
            c - 1,
            comb(m, b + k) * comb(n, a - c + k),
            f"L^{b + k}F^v (x) L^{a - c + k}G",
            a - c + k,
        )
    # mu = c
    for k in range(max(a, b), m + 1):
        put(
            c,
            comb(m, k - a) * comb(n, k - b - c),
            f"L^{k - a}F^v (x) L^{k - b - c}G",
            k - b - c,
        )
    # direct-image terms, c + 1 <= mu <= 0
    for mu in range(max(-n, c + 1), 1):
        r = direct_image(m, a, b, c - mu).rank
        put(mu, r * comb(n, -mu), f"pi_*(tw {mu - c}) (x) L^{-mu}G", None)

    table = BettiTable(m, n, a, b, c, rows)
    sup = table.support()
    if sup and not (-n <= sup[0] and sup[-1] <= m - 1):
        raise AssertionError("resolution support escaped [-n, m-1]")
    return table


def projective_dimension(m: int, n: int, a: int, b: int, c: int) -> int:
    """Projective dimension of the pushdown, from the eight-row table."""
    a, b, c = _normalize(m, n, a, b, c)
    if c == 2 and (a, b) == (1, m):
        return n - m + 1
    if c == 1 and b == m:
        return n - m + 1
    if m - n <= c <= 0:
        return n - m + 1
    if a - n <= c <= m - n:
        return -c + 1
    if a > b and a - b - n <= c <= a - n - 1:
        return -c
    if a <= b and -n <= c <= a - n - 1:
        return -c
    if a > b and -n <= c <= a - b - n - 1:
        return -c - 1
    if c < -n:
        return n
    raise ValueError(f"c={c} outside the projective-dimension table")


def perfection_check(m: int, n: int, a: int, b: int, c: int) -> bool:
    """True exactly when the pushdown is perfect of grade n - m + 1."""
    if not (1 <= a <= m and 1 <= b <= m and m <= n):
        raise ValueError(f"need 1 <= a,b <= m <= n, got {(m, n, a, b)}")
    if c == m - n - 1 and (a == m or b == 1):
        return True
    if m - n <= c <= 0:
        return True
    if c == 1 and (b == m or a == 1):
        return True
    if c == 2 and b == m and a == 1:
        return True
    return False
