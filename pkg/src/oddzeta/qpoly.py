"""Dense univariate polynomials over Q and the substitutions used throughout.

Every functional equation in the package is phrased through
:func:`mobius_subst`, i.e. ``(cX+e)^d p((aX+b)/(cX+e))`` expanded exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import lcm
from typing import Iterable, Sequence

from oddzeta.ratcore import as_fraction, binomial


def _strip(coeffs: Iterable) -> tuple:
    # ints are kept as-is: they are exact and far cheaper than Fraction
    c = [x if type(x) is int or type(x) is Fraction else as_fraction(x) for x in coeffs]
    while c and not c[-1]:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class QPoly:
    """Polynomial with rational coefficients, ``coeffs[i]`` multiplying X^i.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``.
    """

    coeffs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def monomial(cls, k: int, c=1) -> "QPoly":
        return cls((0,) * k + (c,))

    @classmethod
    def constant(cls, c) -> "QPoly":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def dense(self, length: int) -> tuple:
        """Coefficients padded (never truncated) to ``length`` entries."""
        if len(self.coeffs) > length:
            raise ValueError(f"degree {self.degree} does not fit in {length} slots")
        return self.coeffs + (0,) * (length - len(self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __call__(self, x):
        acc = Fraction(0) if isinstance(x, (int, Fraction)) else 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other) -> "QPoly":
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return QPoly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> "QPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "QPoly":
        return _coerce(other) - self

    def __mul__(self, other) -> "QPoly":
        other = _coerce(other)
        if not self or not other:
            return QPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QPoly":
        out = QPoly.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def __truediv__(self, scalar) -> "QPoly":
        s = as_fraction(scalar)
        return QPoly(c / s for c in self.coeffs)

    def __str__(self) -> str:
        if not self:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*X^{k}")
        return " + ".join(terms)


def _coerce(x) -> QPoly:
    return x if isinstance(x, QPoly) else QPoly.constant(x)


X = QPoly.monomial(1)


def linear(a, b) -> QPoly:
    """The polynomial aX + b."""
    return QPoly((b, a))


@lru_cache(maxsize=4096)
def _linear_power(a: int, b: int, k: int) -> tuple:
    """Integer coefficients of (aX + b)^k."""
    return tuple(binomial(k, s) * a**s * b ** (k - s) for s in range(k + 1))


def mobius_subst(p: QPoly, d: int, a: int, b: int, c: int, e: int) -> QPoly:
    """Return ``(cX+e)^d * p((aX+b)/(cX+e))`` expanded exactly.

    Requires ``deg p <= d``; anything larger would not be a polynomial.
    """
    if p.degree > d:
        raise ValueError(f"deg p = {p.degree} exceeds d = {d}")
    den = reduce(lcm, (x.denominator for x in p.coeffs), 1)
    out = [0] * (d + 1)
    for i, ci in enumerate(p.coeffs):
        if not ci:
            continue
        ci = int(ci * den)
        u, w = _linear_power(a, b, i), _linear_power(c, e, d - i)
        for s, us in enumerate(u):
            if us:
                f = ci * us
                for t, wt in enumerate(w):
                    if wt:
                        out[s + t] += f * wt
    if den == 1:
        return QPoly(out)
    return QPoly(Fraction(x, den) for x in out)


def reverse(p: QPoly, d: int) -> QPoly:
    """X^d p(1/X)."""
    return mobius_subst(p, d, 0, 1, 1, 0)


def shift(p: QPoly) -> QPoly:
    """p(1+X)."""
    out = [Fraction(0)] * len(p.coeffs)
    for k, c in enumerate(p.coeffs):
        for i in range(k + 1):
            out[i] += c * binomial(k, i)
    return QPoly(out)


def derivative(p: QPoly) -> QPoly:
    return QPoly(k * c for k, c in enumerate(p.coeffs) if k)


def parity_split(p: QPoly) -> tuple[QPoly, QPoly]:
    """Split into (even part, odd part)."""
    even = QPoly(c if k % 2 == 0 else 0 for k, c in enumerate(p.coeffs))
    odd = QPoly(c if k % 2 else 0 for k, c in enumerate(p.coeffs))
    return even, odd


def l_operator(c: QPoly, n: int) -> QPoly:
    """C(X) - C(1+X) - X^(n-2) C(1 + 1/X) for odd weight ``n``."""
    if c.degree > n - 2:
        raise ValueError(f"deg C = {c.degree} exceeds {n - 2}")
    return c - shift(c) - mobius_subst(c, n - 2, 1, 1, 1, 0)


def is_const_plus_odd(p: QPoly) -> bool:
    even, _ = parity_split(p)
    return even.degree <= 0


def from_dense(coeffs: Sequence) -> QPoly:
    return QPoly(coeffs)
