"""Depth-graded derivation on the double zeta values zeta(2m+1, 2n) of odd weight.

For N = 2K + 1 the generators zeta(2m+1, 2n), m + n = K, and the products
zeta(2m1+1) zeta(2n1) are both indexed by pairs with m ascending, position
m - 1.  The derivation sends a generator to

    sum over (m1, n1) of [delta((m1, n1), (m, n)) - C(2m1, 2m) - C(2m1, 2n-1)]
    zeta(2m1+1) (x) zeta(2n1),

which is the matrix built here.  The same bracket is the product-term
coefficient of the Euler-type decomposition of zeta(2m+1, 2n).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from oddzeta.periodspace import dim_cusp_forms
from oddzeta.ratcore import QMatrix, binomial, rank


def check_weight(n: int) -> None:
    if n % 2 == 0 or n < 5:
        raise ValueError(f"weight must be odd and >= 5, got {n}")


@dataclass(frozen=True, order=True)
class PairIndex:
    m: int
    n: int

    @property
    def weight(self) -> int:
        return 2 * self.m + 2 * self.n + 1

    @property
    def position(self) -> int:
        return self.m - 1

    @property
    def depth_two_args(self) -> tuple[int, int]:
        """Arguments (2m+1, 2n) of the generator."""
        return 2 * self.m + 1, 2 * self.n


def pairs(n: int) -> list[PairIndex]:
    check_weight(n)
    k = (n - 1) // 2
    return [PairIndex(m, k - m) for m in range(1, k)]


def entry(gen: PairIndex, target: PairIndex) -> int:
    delta = int(gen == target)
    return delta - binomial(2 * target.m, 2 * gen.m) - binomial(2 * target.m, 2 * gen.n - 1)


@lru_cache(maxsize=None)
def dmatrix(n: int) -> QMatrix:
    """Rows: generators (m, n); columns: products (m1, n1); canonical order."""
    ps = pairs(n)
    return QMatrix.from_rows([[entry(g, t) for t in ps] for g in ps], len(ps))


@dataclass(frozen=True)
class DecompRow:
    pair: PairIndex
    zetaN_coeff: Fraction
    product_coeffs: tuple


def decomposition(n: int) -> list[DecompRow]:
    """Euler-type decomposition rows, zeta(N) coefficient stored as printed.

    The printed zeta(N) coefficient 1 - C(N-1, 2n-1) - C(N-1, 2m) does not
    survive a numeric check; see :mod:`oddzeta.numzeta` for the resolver.
    """
    m = dmatrix(n)
    out = []
    for g in pairs(n):
        c = 1 - binomial(n - 1, 2 * g.n - 1) - binomial(n - 1, 2 * g.m)
        out.append(DecompRow(g, Fraction(c), m.row(g.position)))
    return out


def predicted_rank(n: int) -> int:
    check_weight(n)
    return (n - 3) // 2 - dim_cusp_forms(n - 1) - dim_cusp_forms(n + 1)


def rank_law(n: int) -> tuple[int, int]:
    """(rank of the derivation matrix, rank predicted by the cusp form count)."""
    return rank(dmatrix(n)), predicted_rank(n)
