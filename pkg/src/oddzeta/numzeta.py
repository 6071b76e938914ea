"""Floating-point single and double zeta values with rigorous tail bounds.

Convention: zeta(n1, n2) = sum over 0 < k1 < k2 of k1^-n1 k2^-n2, so the last
argument carries the largest summation index and must be >= 2.

Tails are handled with Euler-Maclaurin.  For f(x) = x^-s,

    sum_{k >= M} k^-s = M^(1-s)/(s-1) + M^-s/2
                        + sum_{i=1}^{P} B_{2i}/(2i)! (s)_{2i-1} M^(-s-2i+1) + R,

where (s)_j is the rising factorial.  f is completely monotone, so |R| is
at most the first omitted term.  For the double sum, the inner tail
T_b(k+1) = sum_{j > k} j^-b is expanded the same way in powers of k, which
reduces the outer tail to single tails of exponents a+b-1, a+b, a+b+1, ...
All arithmetic is carried in mpmath at 40 significant digits.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from oddzeta.depthmap import check_weight, decomposition, pairs

DPS = 40
EM_TERMS = 12
REL_DENOMINATOR_CAP = 10**6


@dataclass(frozen=True)
class NumericResult:
    value: mpmath.mpf
    error_bound: float

    def __float__(self) -> float:
        return float(self.value)


def _rising(s: int, j: int) -> int:
    out = 1
    for t in range(j):
        out *= s + t
    return out


def _em_coeff(i: int) -> mpmath.mpf:
    """B_{2i} / (2i)!"""
    return mpmath.bernoulli(2 * i) / mpmath.factorial(2 * i)


def _rounding(m: int) -> float:
    return float(m) * 10.0 ** (-(DPS - 3))


def tail_sum(s: int, m: int, terms: int = EM_TERMS) -> NumericResult:
    """sum_{k >= m} k^-s for s >= 2."""
    with mpmath.workdps(DPS):
        mm = mpmath.mpf(m)
        val = mm ** (1 - s) / (s - 1) + mm ** (-s) / 2
        for i in range(1, terms + 1):
            val += _em_coeff(i) * _rising(s, 2 * i - 1) * mm ** (-s - 2 * i + 1)
        rem = abs(_em_coeff(terms + 1)) * _rising(s, 2 * terms + 1) * mm ** (-s - 2 * terms - 1)
        return NumericResult(+val, float(rem) + _rounding(1))


def zeta_single(s: int, eps: float = 1e-12, m: int = 32) -> NumericResult:
    if s < 2:
        raise ValueError(f"zeta({s}) diverges")
    if eps <= 0:
        raise ValueError("eps must be positive")
    while True:
        with mpmath.workdps(DPS):
            head = mpmath.fsum(mpmath.mpf(k) ** (-s) for k in range(1, m))
            tail = tail_sum(s, m)
            res = NumericResult(head + tail.value, tail.error_bound + _rounding(m))
        if res.error_bound <= eps:
            return res
        m *= 2


def zeta_double(n1: int, n2: int, eps: float = 1e-12, m: int = 64) -> NumericResult:
    """zeta(n1, n2) = sum_{0<k1<k2} k1^-n1 k2^-n2.

    Head: k1 < m with exact inner tails T(k1+1), obtained by backward
    recursion from an Euler-Maclaurin value of T(m).  Tail: k1 >= m with T
    expanded in powers of k1; see the module docstring for the bound.
    """
    if n2 < 2:
        raise ValueError(f"zeta({n1}, {n2}) diverges")
    if n1 < 1:
        raise ValueError("n1 must be >= 1")
    if eps <= 0:
        raise ValueError("eps must be positive")
    a, b = n1, n2
    while True:
        with mpmath.workdps(DPS):
            t_m = tail_sum(b, m)
            inner = t_m.value
            head = mpmath.mpf(0)
            # k1 = m-1 down to 1, inner = T(k1 + 1)
            for k1 in range(m - 1, 0, -1):
                head += mpmath.mpf(k1) ** (-a) * inner
                inner += mpmath.mpf(k1) ** (-b)
            harmonic_bound = 1.0 + float(mpmath.log(m))
            err = t_m.error_bound * harmonic_bound

            # T(k+1) = k^(1-b)/(b-1) - k^-b/2 + sum_i B_2i/(2i)! (b)_{2i-1} k^(-b-2i+1) + R(k)
            s1 = tail_sum(a + b - 1, m)
            s2 = tail_sum(a + b, m)
            outer = s1.value / (b - 1) - s2.value / 2
            err += s1.error_bound / (b - 1) + s2.error_bound / 2
            for i in range(1, EM_TERMS + 1):
                c = _em_coeff(i) * _rising(b, 2 * i - 1)
                si = tail_sum(a + b + 2 * i - 1, m)
                outer += c * si.value
                err += float(abs(c)) * si.error_bound
            r_coeff = abs(_em_coeff(EM_TERMS + 1)) * _rising(b, 2 * EM_TERMS + 1)
            r_tail = tail_sum(a + b + 2 * EM_TERMS + 1, m)
            err += float(r_coeff * (r_tail.value + r_tail.error_bound))
            res = NumericResult(head + outer, err + _rounding(m))
        if res.error_bound <= eps:
            return res
        m *= 2


# relation certificates


@dataclass(frozen=True)
class RelationCertificate:
    weight: int
    value: mpmath.mpf
    ratio: mpmath.mpf
    ratio_error: float
    rational: Fraction
    distance: float
    eps: float
    passed: bool


def reconstruct(x, cap: int = REL_DENOMINATOR_CAP) -> Fraction:
    """Best rational approximation with denominator <= cap (continued fractions)."""
    with mpmath.workdps(DPS):
        return Fraction(mpmath.nstr(x, DPS, min_fixed=-mpmath.inf, max_fixed=mpmath.inf)).limit_denominator(cap)


def verify_relation_numeric(n: int, rel, eps: float = 1e-8) -> RelationCertificate:
    """Check that sum c_r zeta(r, N-r) is a small-height rational multiple of zeta(N).

    Every zeta value is evaluated with error at most ``eps``.  The
    certificate passes when the accumulated error bound of the ratio stays
    below ``eps`` and the ratio lies within that bound of its best rational
    approximation with denominator <= 10^6.  A window of ``eps`` itself would
    be useless: almost every real lies within ~1e-12 of such a rational.
    """
    check_weight(n)
    coeffs = list(rel.coeffs) if hasattr(rel, "coeffs") else list(rel)
    with mpmath.workdps(DPS):
        total = mpmath.mpf(0)
        err = 0.0
        for r, c in zip(range(3, n - 1, 2), coeffs):
            if not c:
                continue
            z = zeta_double(r, n - r, eps)
            total += mpmath.mpf(c.numerator) / c.denominator * z.value if isinstance(c, Fraction) else c * z.value
            err += float(abs(c)) * z.error_bound
        zn = zeta_single(n, eps)
        ratio = total / zn.value
        ratio_err = err / float(zn.value) + float(abs(total)) * zn.error_bound / float(zn.value) ** 2
        ratio_err += _rounding(len(coeffs) + 1)
        rho_hat = reconstruct(ratio)
        dist = float(abs(ratio - mpmath.mpf(rho_hat.numerator) / rho_hat.denominator))
    passed = ratio_err <= eps and dist <= ratio_err
    return RelationCertificate(n, total, ratio, ratio_err, rho_hat, dist, eps, passed)


# decomposition convention


CANDIDATES = ("as_printed", "scaled_minus_half", "arguments_swapped")


@dataclass(frozen=True)
class ConventionRow:
    m: int
    n: int
    lhs: float
    empirical_zetaN_coeff: Fraction
    printed_zetaN_coeff: Fraction
    residuals: dict


@dataclass(frozen=True)
class ConventionReport:
    weight: int
    rows: tuple
    matching: tuple
    product_terms_match: bool
    tol: float


def resolve_decomposition_convention(n: int, tol: float = 1e-6) -> ConventionReport:
    """Test readings of the decomposition's zeta(N) coefficient against numerics.

    The product coefficients are held fixed.  The empirical zeta(N)
    coefficient (what the product part leaves over, divided by zeta(N)) is
    reconstructed as a rational; ``product_terms_match`` records that this
    leftover is a small-height rational multiple of zeta(N) at every
    generator, which is what the fixed product coefficients must achieve.
    """
    if n not in (5, 7, 9):
        raise ValueError("the convention resolver runs at N in {5, 7, 9}")
    eps = 1e-20
    with mpmath.workdps(DPS):
        odd = {t.m: zeta_single(2 * t.m + 1, eps).value for t in pairs(n)}
        even = {t.n: zeta_single(2 * t.n, eps).value for t in pairs(n)}
        zn = zeta_single(n, eps).value
        rows = []
        product_ok = True
        for row in decomposition(n):
            g = row.pair
            prod = mpmath.fsum(
                mpmath.mpf(int(c)) * odd[t.m] * even[t.n] for c, t in zip(row.product_coeffs, pairs(n))
            )
            lhs = zeta_double(2 * g.m + 1, 2 * g.n, eps).value
            swapped = zeta_double(2 * g.n, 2 * g.m + 1, eps).value
            a = row.zetaN_coeff
            readings = {
                "as_printed": lhs - (a.numerator * zn / a.denominator + prod),
                "scaled_minus_half": lhs - (-a.numerator * zn / (2 * a.denominator) + prod),
                "arguments_swapped": swapped - (a.numerator * zn / a.denominator + prod),
            }
            emp = (lhs - prod) / zn
            emp_hat = reconstruct(emp, 1000)
            if abs(emp - mpmath.mpf(emp_hat.numerator) / emp_hat.denominator) > 1e-15:
                product_ok = False
            rows.append(
                ConventionRow(g.m, g.n, float(lhs), emp_hat, a, {k: float(abs(v)) for k, v in readings.items()})
            )
    matching = tuple(c for c in CANDIDATES if all(r.residuals[c] <= tol for r in rows))
    return ConventionReport(n, tuple(rows), matching, product_ok, tol)
