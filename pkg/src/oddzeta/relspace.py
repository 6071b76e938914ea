"""Relations among zeta(r, N-r), r odd, modulo zeta(N), and the maps into them.

Relations are the left kernel of :func:`oddzeta.depthmap.dmatrix`.  The maps
from period polynomials are

* ``xi_plus``: p in W^+_{N-1}.  Writing p(x+y, y) = sum C(N-2, r-1) b_{N-r,r}
  x^{N-r-1} y^{r-2}, the relation is (b_{N-r,r} - b_{r,N-r}) over odd r.
* ``xi_minus``: q in W^-_{N+1}, same recipe applied to d/dx q(x+y, y) with
  monomials x^{N-r-1} y^{r-1}.

Dehomogenizing at y = 1 turns p(x+y, y) into p(X+1), so both recipes read
coefficients off :func:`oddzeta.qpoly.shift`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from oddzeta.depthmap import check_weight, dmatrix, pairs
from oddzeta.periodspace import contains, w_basis
from oddzeta.qpoly import QPoly, derivative, reverse, shift
from oddzeta.ratcore import (
    QMatrix,
    binomial,
    integer_normalize,
    left_kernel_basis,
    rank,
    vec_mat,
)


@dataclass(frozen=True)
class RelationVec:
    """Coefficients c_r of sum c_r zeta(r, N-r), odd r = 3, 5, ..., N-2."""

    weight: int
    coeffs: tuple

    @property
    def indices(self) -> list[int]:
        return list(range(3, self.weight - 1, 2))

    def items(self):
        return zip(self.indices, self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)


def _odd_r(n: int) -> range:
    return range(3, n - 1, 2)


def xi_plus(p: QPoly, n: int) -> RelationVec:
    check_weight(n)
    if p.degree > n - 3 or not contains(p, n - 1, "+"):
        raise ValueError(f"{p} is not in W+_{n - 1}")
    a = shift(p)
    return RelationVec(
        n,
        tuple(
            Fraction(a.coeff(n - r - 1) - a.coeff(r - 1), binomial(n - 2, r - 1))
            for r in _odd_r(n)
        ),
    )


def xi_minus(q: QPoly, n: int) -> RelationVec:
    check_weight(n)
    if q.degree > n - 1 or not contains(q, n + 1, "-"):
        raise ValueError(f"{q} is not in W-_{n + 1}")
    # d/dx of x^s y^(N-1-s) is s x^(s-1) y^(N-1-s)
    b = shift(q)
    return RelationVec(
        n,
        tuple(
            Fraction((n - r) * b.coeff(n - r) - r * b.coeff(r), binomial(n - 2, r - 1))
            for r in _odd_r(n)
        ),
    )


@dataclass(frozen=True)
class JMatrix:
    """Rows: W+_{N-1} basis then W-_{N+1} basis; columns: pairs (m1, n1)."""

    weight: int
    n_plus: int
    n_minus: int
    matrix: QMatrix


def j_plus_row(p: QPoly, n: int) -> list:
    return [p.coeff(2 * t.m - 1) for t in pairs(n)]


def j_minus_row(q: QPoly, n: int) -> list:
    t_poly = reverse(derivative(q), n - 2)
    return [t_poly.coeff(2 * t.m) for t in pairs(n)]


@lru_cache(maxsize=None)
def j_matrix(n: int) -> JMatrix:
    check_weight(n)
    plus, minus = w_basis(n - 1, "+").basis, w_basis(n + 1, "-").basis
    rows = [j_plus_row(p, n) for p in plus] + [j_minus_row(q, n) for q in minus]
    return JMatrix(n, len(plus), len(minus), QMatrix.from_rows(rows, len(pairs(n))))


@lru_cache(maxsize=None)
def relations(n: int) -> tuple:
    """Integer-normalized basis of the relation space, indexed by odd r."""
    check_weight(n)
    return tuple(RelationVec(n, integer_normalize(u)) for u in left_kernel_basis(dmatrix(n)))


def xi_images(n: int) -> list[RelationVec]:
    plus, minus = w_basis(n - 1, "+").basis, w_basis(n + 1, "-").basis
    return [xi_plus(p, n) for p in plus] + [xi_minus(q, n) for q in minus]


@dataclass(frozen=True)
class ExactnessReport:
    weight: int
    generator_count: int
    dim_w_plus: int
    dim_w_minus: int
    rank_d: int
    rank_j: int
    n_relations: int
    composition_vanishes: bool
    j_injective: bool
    middle_exact: bool
    xi_isomorphism: bool
    notes: tuple = field(default=())

    @property
    def certificates(self) -> dict[str, bool]:
        return {
            "composition_vanishes": self.composition_vanishes,
            "j_injective": self.j_injective,
            "middle_exact": self.middle_exact,
            "xi_isomorphism": self.xi_isomorphism,
        }

    @property
    def ok(self) -> bool:
        return all(self.certificates.values())


def verify_exactness(n: int) -> ExactnessReport:
    """Check the four exact certificates for weight ``n``.

    (i) D J^T = 0, (ii) rank J = dim W+ + dim W-, (iii) rank D + rank J =
    generator count, (iv) xi images are independent, annihilate D and have
    the same count as the relation basis.
    """
    d = dmatrix(n)
    jm = j_matrix(n)
    j = jm.matrix
    k1 = d.cols
    rank_d, rank_j = rank(d), rank(j)
    dims = jm.n_plus + jm.n_minus
    notes = []

    if j.rows:
        composition = (d @ j.transpose()).is_zero()
    else:
        composition = True

    images = xi_images(n)
    rels = relations(n)
    in_kernel = all(not any(vec_mat(v.coeffs, d)) for v in images)
    independent = not images or rank(QMatrix.from_rows([v.coeffs for v in images], k1)) == len(images)
    xi_iso = in_kernel and independent and len(images) == len(rels)
    if not in_kernel:
        notes.append("xi image outside the left kernel")
    if not independent:
        notes.append("xi images dependent")

    return ExactnessReport(
        weight=n,
        generator_count=k1,
        dim_w_plus=jm.n_plus,
        dim_w_minus=jm.n_minus,
        rank_d=rank_d,
        rank_j=rank_j,
        n_relations=len(rels),
        composition_vanishes=composition,
        j_injective=rank_j == dims,
        middle_exact=rank_d == k1 - rank_j,
        xi_isomorphism=xi_iso,
        notes=tuple(notes),
    )
