"""Restricted period polynomial spaces W_h^+ and W_h^- as exact kernels.

A polynomial P of degree <= h-2 is a period polynomial of weight h when

    P(X) + X^(h-2) P(-1/X) = 0
    P(X) + X^(h-2) P(1 - 1/X) + (X-1)^(h-2) P(-1/(X-1)) = 0.

``+`` adds P(0) = 0 and P(X) = X^(h-2) P(1/X); ``-`` adds P(0) = 0 and
P(X) = -X^(h-2) P(1/X).  Each condition is linear in the coefficient vector,
so every space is the right kernel of a stacked constraint matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from oddzeta.qpoly import QPoly, mobius_subst
from oddzeta.ratcore import QMatrix, integer_normalize, rank, right_kernel_basis

SIGNS = ("+", "-", "full")

# (sign, (a, b, c, e)) terms of each relation; each term contributes
# sign * (cX+e)^(h-2) P((aX+b)/(cX+e)).
_IDENTITY = (1, (1, 0, 0, 1))
_S_RELATION = (_IDENTITY, (1, (0, -1, 1, 0)))
_U_RELATION = (_IDENTITY, (1, (1, -1, 1, 0)), (1, (0, -1, 1, -1)))
_SYMMETRIC = (_IDENTITY, (-1, (0, 1, 1, 0)))
_ANTISYMMETRIC = (_IDENTITY, (1, (0, 1, 1, 0)))


def _check_weight(h: int) -> None:
    if h % 2 or h < 4:
        raise ValueError(f"weight must be even and >= 4, got {h}")


def _relation_rows(terms, d: int) -> list[list]:
    # column k is the image of X^k
    cols = []
    for k in range(d + 1):
        img = [0] * (d + 1)
        mono = QPoly.monomial(k)
        for s, abce in terms:
            for i, x in enumerate(mobius_subst(mono, d, *abce).coeffs):
                img[i] += s * x
        cols.append(img)
    return [[cols[k][i] for k in range(d + 1)] for i in range(d + 1)]


@lru_cache(maxsize=None)
def period_constraint_matrix(h: int, sign: str) -> QMatrix:
    """Constraint matrix whose right kernel is W_h (``full``), W_h^+ or W_h^-."""
    _check_weight(h)
    if sign not in SIGNS:
        raise ValueError(f"sign must be one of {SIGNS}, got {sign!r}")
    d = h - 2
    rows = _relation_rows(_S_RELATION, d) + _relation_rows(_U_RELATION, d)
    if sign != "full":
        rows.append([1] + [0] * d)
        rows += _relation_rows(_SYMMETRIC if sign == "+" else _ANTISYMMETRIC, d)
    return QMatrix.from_rows([r for r in rows if any(r)], d + 1)


@dataclass(frozen=True)
class PeriodSpace:
    weight: int
    sign: str
    basis: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)


def _normalize_poly(v) -> QPoly:
    # coprime integers, positive leading (highest-degree) coefficient
    return QPoly(reversed(integer_normalize(tuple(reversed(v)))))


@lru_cache(maxsize=None)
def w_basis(h: int, sign: str) -> PeriodSpace:
    basis = right_kernel_basis(period_constraint_matrix(h, sign))
    return PeriodSpace(h, sign, tuple(_normalize_poly(v) for v in basis))


def contains(p: QPoly, h: int, sign: str) -> bool:
    """Exact membership test against the full constraint system."""
    _check_weight(h)
    if p.degree > h - 2:
        return False
    m = period_constraint_matrix(h, sign)
    v = p.dense(h - 1)
    return all(not sum(a * b for a, b in zip(m.row(i), v)) for i in range(m.rows))


def kernel_dim(h: int, sign: str) -> int:
    m = period_constraint_matrix(h, sign)
    return m.cols - rank(m)


def dim_cusp_forms(k: int) -> int:
    """Dimension of weight-k cusp forms for SL2(Z)."""
    if k % 2 or k < 4:
        return 0
    return k // 12 - 1 if k % 12 == 2 else k // 12
