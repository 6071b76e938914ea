"""Verification of the symmetrization argument behind exactness in the middle.

For odd N an even polynomial C(X) = sum_{n=1}^{K-1} c_n X^(2n) is called
admissible when L_C(X) = C(X) - C(1+X) - X^(N-2) C(1+1/X) is a constant plus
an odd polynomial.  Every admissible C splits as

    (N-1) C(X) = X p(X) + X^(N-2) q'(1/X),
    p(X) = C'(X) + X^(N-3) C'(1/X),   q(X) = X^(N-1) C(1/X) - C(X),

with p in W+_{N-1} and q in W-_{N+1}.  The binomial identity that makes the
symmetrization step work is checked by brute force over all index pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from oddzeta.depthmap import check_weight
from oddzeta.periodspace import contains
from oddzeta.qpoly import (
    X,
    QPoly,
    derivative,
    is_const_plus_odd,
    l_operator,
    mobius_subst,
    parity_split,
    reverse,
)
from oddzeta.ratcore import QMatrix, binomial, integer_normalize, right_kernel_basis


@dataclass(frozen=True)
class AdmissibleC:
    weight: int
    poly: QPoly

    def __post_init__(self):
        _, odd = parity_split(self.poly)
        if odd or self.poly.coeff(0) or self.poly.degree > self.weight - 3:
            raise ValueError("C must be even, vanish at 0 and have degree <= N-3")


def _even_basis(n: int) -> list[QPoly]:
    return [QPoly.monomial(2 * k) for k in range(1, (n - 1) // 2)]


@lru_cache(maxsize=None)
def admissible_space(n: int) -> tuple:
    """Basis of the admissible C for weight ``n``, integer-normalized."""
    check_weight(n)
    basis = _even_basis(n)
    images = [l_operator(c, n) for c in basis]
    # coefficients of X^2, X^4, ..., X^(N-3) of L_C must vanish
    rows = [[img.coeff(deg) for img in images] for deg in range(2, n - 2, 2)]
    kernel = right_kernel_basis(QMatrix.from_rows(rows, len(basis)))
    out = []
    for v in kernel:
        v = integer_normalize(v)
        out.append(AdmissibleC(n, sum((c * b for c, b in zip(v, basis)), QPoly())))
    return tuple(out)


def symmetrize_p(c: AdmissibleC) -> QPoly:
    dc = derivative(c.poly)
    return dc + reverse(dc, c.weight - 3)


def antisymmetrize_q(c: AdmissibleC) -> QPoly:
    return reverse(c.poly, c.weight - 1) - c.poly


def split_identity_holds(c: AdmissibleC) -> bool:
    """X^(N-2) q'(1/X) == (N-1) C(X) - X p(X), exactly."""
    n = c.weight
    lhs = reverse(derivative(antisymmetrize_q(c)), n - 2)
    return lhs == (n - 1) * c.poly - X * symmetrize_p(c)


def symmetrized_is_admissible(c: AdmissibleC) -> bool:
    """L applied to X p(X) is again a constant plus an odd polynomial."""
    return is_const_plus_odd(l_operator(X * symmetrize_p(c), c.weight))


def verify_membership(n: int) -> bool:
    """Every admissible C yields p in W+_{N-1} and q in W-_{N+1}."""
    for c in admissible_space(n):
        p = symmetrize_p(c) / (n - 1)
        q = antisymmetrize_q(c)
        if not (contains(p, n - 1, "+") and contains(q, n + 1, "-")):
            return False
    return True


# difference calculus


def binomial_poly(k: int) -> QPoly:
    """C(T, k) = T(T-1)...(T-k+1)/k! as a polynomial in T."""
    out = QPoly.constant(1)
    for s in range(k):
        out = out * QPoly((-s, 1))
    return out / _factorial(k)


def _factorial(k: int) -> int:
    out = 1
    for s in range(2, k + 1):
        out *= s
    return out


def newton_expansion(f: QPoly, bound: int) -> list[Fraction]:
    """Forward differences (f(0), Df(0), ..., D^bound f(0))."""
    if f.degree > bound:
        raise ValueError(f"deg f = {f.degree} exceeds bound {bound}")
    values = [f(Fraction(t)) for t in range(bound + 1)]
    out = []
    for _ in range(bound + 1):
        out.append(values[0])
        values = [b - a for a, b in zip(values, values[1:])]
    return out


def newton_reconstruct(diffs: list[Fraction]) -> QPoly:
    return sum((d * binomial_poly(l) for l, d in enumerate(diffs)), QPoly())


def symmetrization_f(i: int, k: int) -> QPoly:
    """f(T) = T/2 [C(T, 2i) + C(2K - T, 2i)]."""
    b = binomial_poly(2 * i)
    mirrored = mobius_subst(b, 2 * i, -1, 2 * k, 0, 1)
    return X * (b + mirrored) / 2


def x_coeff(p: int, i: int, k: int) -> Fraction:
    """Closed form of the p-th forward difference of f at 0.

    Valid for 0 <= p <= 2K; vanishes for p > 2i + 1.
    """
    return Fraction(p, 2) * (binomial(1, 2 * i - p + 1) - (-1) ** p * binomial(2 * k - p, 2 * i - p + 1))


def _delta(a: int, b: int) -> int:
    return int(a == b)


def identity_e_sides(i: int, j: int, k: int) -> tuple[Fraction, Fraction]:
    c = binomial
    x = {p: x_coeff(p, i, k) for p in range(1, 2 * i + 2)}
    lhs = sum(
        x[2 * l - 1] * (c(2 * j, 2 * k - 2 * l) + c(2 * j, 2 * l - 1) - _delta(j, k - l))
        for l in range(1, i + 2)
    ) + sum(
        x[2 * l] * (c(2 * j, 2 * l) + c(2 * j, 2 * k - 2 * l - 1) - _delta(j, l))
        for l in range(1, i + 1)
    )
    rhs = j * (
        c(2 * j, 2 * i)
        + c(2 * j, 2 * k - 2 * i - 1)
        - _delta(j, i)
        + c(2 * k - 2 * j, 2 * i)
        + c(2 * k - 2 * j, 2 * k - 2 * i - 1)
        - _delta(k - j, i)
    )
    return lhs, rhs


def verify_lemma_sym(k: int) -> bool:
    """The symmetrization identity for all 1 <= i, j <= K-1 (N = 2K + 1)."""
    if k < 2:
        raise ValueError("K must be >= 2")
    return all(
        lhs == rhs
        for i in range(1, k)
        for j in range(1, k)
        for lhs, rhs in [identity_e_sides(i, j, k)]
    )


def x_coeffs_match_differences(i: int, k: int) -> bool:
    """Closed-form x_p agrees with the forward differences of f for all p <= 2K."""
    diffs = newton_expansion(symmetrization_f(i, k), 2 * k)
    return all(diffs[p] == x_coeff(p, i, k) for p in range(2 * k + 1))


@dataclass(frozen=True)
class LemmaReport:
    weight: int
    admissible_dim: int
    membership: bool
    split_identity: bool
    symmetrized_admissible: bool
    identity_e: bool

    @property
    def ok(self) -> bool:
        return self.membership and self.split_identity and self.symmetrized_admissible and self.identity_e


def lemma_suite(n: int) -> LemmaReport:
    check_weight(n)
    space = admissible_space(n)
    return LemmaReport(
        weight=n,
        admissible_dim=len(space),
        membership=verify_membership(n),
        split_identity=all(split_identity_holds(c) for c in space),
        symmetrized_admissible=all(symmetrized_is_admissible(c) for c in space),
        identity_e=verify_lemma_sym((n - 1) // 2),
    )
