import math
from fractions import Fraction

import mpmath
import pytest

from oddzeta.numzeta import (
    DPS,
    reconstruct,
    resolve_decomposition_convention,
    tail_sum,
    verify_relation_numeric,
    zeta_double,
    zeta_single,
)
from oddzeta.relspace import RelationVec, relations


def hurwitz_oracle(a, b):
    """sum_{k1 >= 1} k1^-a * zeta(b, k1 + 1) via mpmath's own summation."""
    with mpmath.workdps(30):
        return mpmath.nsum(lambda k: k ** (-a) * mpmath.zeta(b, k + 1), [1, mpmath.inf])


def test_zeta_single_examples():
    assert float(zeta_single(2, 1e-12)) == pytest.approx(math.pi**2 / 6, abs=1e-12)
    assert abs(zeta_single(3, 1e-12).value - mpmath.mpf("1.2020569031595942853997")) < 1e-12
    assert abs(zeta_single(5, 1e-12).value - mpmath.mpf("1.0369277551433699263314")) < 1e-12


def test_zeta_single_bound_is_honest():
    for s in (2, 3, 7, 20):
        r = zeta_single(s, 1e-12)
        with mpmath.workdps(40):
            assert abs(r.value - mpmath.zeta(s)) <= r.error_bound
        assert r.error_bound <= 1e-12


def test_tail_sum_against_hurwitz():
    for s, m in [(2, 10), (3, 32), (6, 5)]:
        t = tail_sum(s, m)
        with mpmath.workdps(40):
            assert abs(t.value - mpmath.zeta(s, m)) <= t.error_bound


def test_domain_errors():
    with pytest.raises(ValueError):
        zeta_single(1)
    with pytest.raises(ValueError):
        zeta_double(3, 1)
    with pytest.raises(ValueError):
        zeta_single(2, eps=0)


def test_zeta_double_examples():
    z = zeta_double(3, 2, 1e-8)
    assert abs(float(z) - 0.711566) < 1e-6
    assert abs(zeta_double(1, 2, 1e-8).value - zeta_single(3).value) < 2e-8


@pytest.mark.parametrize("a,b", [(3, 2), (1, 2), (2, 3), (5, 4), (1, 5), (9, 2)])
def test_zeta_double_against_oracle(a, b):
    z = zeta_double(a, b, 1e-12)
    assert abs(z.value - hurwitz_oracle(a, b)) <= max(z.error_bound, 1e-25)


@pytest.mark.parametrize(
    "a,b", [(a, b) for a in range(1, 9) for b in range(1, 9) if a + b <= 9 and a >= 2 and b >= 2]
)
def test_stuffle(a, b):
    za, zb = zeta_single(a, 1e-12), zeta_single(b, 1e-12)
    zab, zba = zeta_double(a, b, 1e-12), zeta_double(b, a, 1e-12)
    zs = zeta_single(a + b, 1e-12)
    bound = za.error_bound * 2 + zb.error_bound * 2 + zab.error_bound + zba.error_bound + zs.error_bound
    with mpmath.workdps(DPS):
        assert abs(za.value * zb.value - zab.value - zba.value - zs.value) <= bound + 1e-30


def test_reconstruct():
    assert reconstruct(mpmath.mpf(-1.5)) == Fraction(-3, 2)
    with mpmath.workdps(30):
        assert reconstruct(mpmath.pi, 1000) == Fraction(355, 113)


def test_relation_certificate_weight_13():
    (rel,) = relations(13)
    cert = verify_relation_numeric(13, rel, 1e-8)
    assert cert.passed
    assert cert.rational.denominator <= 10**6


def test_zero_relation():
    cert = verify_relation_numeric(13, RelationVec(13, (0,) * 5), 1e-8)
    assert cert.passed
    assert cert.rational == 0
    assert cert.value == 0


def test_corrupted_relation_fails():
    (rel,) = relations(13)
    bad = RelationVec(13, (rel.coeffs[0] + 1,) + rel.coeffs[1:])
    cert = verify_relation_numeric(13, bad, 1e-8)
    assert not cert.passed
    # the best 10^6-denominator rational is still within eps: the window must be the error bound
    assert cert.distance < 1e-8


def test_convention_weight_5():
    rep = resolve_decomposition_convention(5)
    assert rep.matching == ("scaled_minus_half",)
    (row,) = rep.rows
    assert row.printed_zetaN_coeff == -9
    assert row.empirical_zetaN_coeff == Fraction(9, 2)
    assert row.residuals["as_printed"] > 1
    assert rep.product_terms_match


def test_convention_consistent():
    readings = {n: resolve_decomposition_convention(n).matching for n in (5, 7, 9)}
    assert readings[5] == readings[7] == readings[9] == ("scaled_minus_half",)


def test_convention_weight_guard():
    with pytest.raises(ValueError):
        resolve_decomposition_convention(11)
