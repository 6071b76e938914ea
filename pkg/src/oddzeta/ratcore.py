"""Exact rational scalars and dense matrix algebra.

Scalars are :class:`fractions.Fraction`. Elimination runs fraction-free on
integer rows (content removed after every update) and only divides by the
pivots at the very end, which keeps the big-integer sizes under control for
the ~100-column constraint systems built elsewhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import comb, gcd, lcm
from typing import Iterable, Sequence

Rational = Fraction
Vector = tuple  # tuple[Fraction, ...]


def binomial(n: int, k: int) -> int:
    """Binomial coefficient with the conventions C(n, k) = 0 for k < 0 or k > n >= 0.

    Negative ``n`` with ``k >= 1`` never occurs in the formulas we evaluate,
    so it is rejected to surface index bugs early.
    """
    if k < 0:
        return 0
    if k == 0:
        return 1
    if n < 0:
        raise ValueError(f"binomial({n}, {k}): negative upper index")
    if k > n:
        return 0
    return comb(n, k)


def as_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class QMatrix:
    """Dense exact matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "QMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("column count required for an empty matrix")
            cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        entries = tuple(as_fraction(x) for r in rows for x in r)
        return cls(len(rows), cols, entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def tolist(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "QMatrix":
        return QMatrix(
            self.cols,
            self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        ocols = [other.column(j) for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            out.extend(sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)) for c in ocols)
        return QMatrix(self.rows, other.cols, tuple(out))

    def column(self, j: int) -> tuple:
        return tuple(self[i, j] for i in range(self.rows))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(x) for x in self.row(i)) + "]" for i in range(self.rows))


def _integer_rows(m: QMatrix) -> list[list[int]]:
    out = []
    for i in range(m.rows):
        r = m.row(i)
        den = reduce(lcm, (x.denominator for x in r), 1)
        out.append([x.numerator * (den // x.denominator) for x in r])
    return out


def _primitive(row: list[int]) -> list[int]:
    g = reduce(gcd, row, 0)
    if g > 1:
        return [x // g for x in row]
    return row


def _eliminate(target: list[int], prow: list[int], c: int) -> list[int]:
    p, a = prow[c], target[c]
    g = gcd(p, a)
    sp, sa = p // g, a // g
    return _primitive([sp * x - sa * y for x, y in zip(target, prow)])


def _echelon(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free reduction to reduced echelon form over the integers.

    Pivot is the first row with a nonzero entry in the current column.  The
    forward pass drops rows as soon as they vanish, so the back-substitution
    only touches the (at most ``ncols``) pivot rows.
    """
    rows = [_primitive(r) for r in rows if any(r)]
    ech: list[list[int]] = []
    pivots: list[int] = []
    for c in range(ncols):
        if not rows:
            break
        sel = next((i for i, r in enumerate(rows) if r[c]), None)
        if sel is None:
            continue
        prow = rows.pop(sel)
        rest = []
        for r in rows:
            if r[c]:
                r = _eliminate(r, prow, c)
                if not any(r):
                    continue
            rest.append(r)
        rows = rest
        ech.append(prow)
        pivots.append(c)
    for k in range(len(ech) - 1, -1, -1):
        c = pivots[k]
        for i in range(k):
            if ech[i][c]:
                ech[i] = _eliminate(ech[i], ech[k], c)
    return ech, pivots


def rref(m: QMatrix) -> tuple[QMatrix, int, list[int]]:
    """Reduced row echelon form, rank and pivot columns.

    The returned matrix keeps the shape of ``m``; zero rows go to the bottom.
    """
    ech, pivots = _echelon(_integer_rows(m), m.cols)
    out = []
    for r, c in zip(ech, pivots):
        p = r[c]
        out.append([Fraction(x, p) for x in r])
    out.extend([[Fraction(0)] * m.cols for _ in range(m.rows - len(out))])
    return QMatrix.from_rows(out, m.cols), len(pivots), pivots


def rank(m: QMatrix) -> int:
    return len(_echelon(_integer_rows(m), m.cols)[1])


def normalize(v: Sequence[Fraction]) -> Vector:
    """Scale so that the first nonzero entry is 1."""
    lead = next((x for x in v if x), None)
    if lead is None:
        return tuple(Fraction(x) for x in v)
    return tuple(Fraction(x) / lead for x in v)


def integer_normalize(v: Sequence[Fraction]) -> Vector:
    """Scale to coprime integers with a positive first nonzero entry."""
    v = [as_fraction(x) for x in v]
    if not any(v):
        return tuple(v)
    den = reduce(lcm, (x.denominator for x in v), 1)
    ints = [x.numerator * (den // x.denominator) for x in v]
    g = reduce(gcd, ints, 0)
    lead = next(x for x in ints if x)
    if lead < 0:
        g = -g
    return tuple(Fraction(x // g) for x in ints)


def right_kernel_basis(m: QMatrix) -> list[Vector]:
    """Basis of {v : m v = 0}, one vector per free column, each normalized."""
    ech, pivots = _echelon(_integer_rows(m), m.cols)
    pivset = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivset:
            continue
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for r, c in zip(ech, pivots):
            if r[f]:
                v[c] = Fraction(-r[f], r[c])
        basis.append(normalize(v))
    return basis


def left_kernel_basis(m: QMatrix) -> list[Vector]:
    """Basis of {u : u m = 0}."""
    return right_kernel_basis(m.transpose())


def dot(u: Iterable, v: Iterable) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def vec_mat(u: Sequence, m: QMatrix) -> Vector:
    return tuple(dot(u, m.column(j)) for j in range(m.cols))


def mat_vec(m: QMatrix, v: Sequence) -> Vector:
    return tuple(dot(m.row(i), v) for i in range(m.rows))
