from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from oddzeta.depthmap import dmatrix
from oddzeta.periodspace import contains, dim_cusp_forms, w_basis
from oddzeta.qpoly import QPoly, parity_split, reverse
from oddzeta.ratcore import QMatrix, binomial, rank, right_kernel_basis
from oddzeta.symcheck import (
    AdmissibleC,
    admissible_space,
    antisymmetrize_q,
    binomial_poly,
    identity_e_sides,
    lemma_suite,
    newton_expansion,
    newton_reconstruct,
    split_identity_holds,
    symmetrization_f,
    symmetrize_p,
    symmetrized_is_admissible,
    verify_lemma_sym,
    verify_membership,
    x_coeff,
    x_coeffs_match_differences,
)


def test_admissible_space_examples():
    assert admissible_space(5) == ()
    assert len(admissible_space(13)) == 1
    assert len(admissible_space(17)) == 2


@pytest.mark.parametrize("n", range(5, 40, 2))
def test_admissible_dim_and_right_kernel(n):
    space = admissible_space(n)
    assert len(space) == dim_cusp_forms(n - 1) + dim_cusp_forms(n + 1)
    # coefficient vectors of X^2, X^4, ... span the right kernel of the derivation matrix
    vecs = [[c.poly.coeff(2 * m) for m in range(1, (n - 1) // 2)] for c in space]
    kernel = right_kernel_basis(dmatrix(n))
    assert len(kernel) == len(vecs)
    if vecs:
        assert rank(QMatrix.from_rows(vecs + kernel)) == len(vecs)


def test_admissible_c_validation():
    with pytest.raises(ValueError):
        AdmissibleC(13, QPoly.monomial(3))
    with pytest.raises(ValueError):
        AdmissibleC(13, QPoly((1, 0, 1)))


def test_symmetrize_zero():
    zero = AdmissibleC(13, QPoly())
    assert symmetrize_p(zero) == QPoly()
    assert antisymmetrize_q(zero) == QPoly()


def test_symmetrize_weight_13_is_the_plus_basis():
    (c,) = admissible_space(13)
    p = symmetrize_p(c)
    (w,) = w_basis(12, "+").basis
    assert rank(QMatrix.from_rows([p.dense(11), w.dense(11)])) == 1


@pytest.mark.parametrize("n", [13, 17, 23, 25, 29])
def test_split_properties(n):
    for c in admissible_space(n):
        p = symmetrize_p(c)
        q = antisymmetrize_q(c)
        assert p == reverse(p, n - 3)
        assert not parity_split(p)[0]
        assert q.coeff(0) == 0
        assert q + reverse(q, n - 1) == QPoly()
        assert not parity_split(q)[1]
        assert split_identity_holds(c)
        assert symmetrized_is_admissible(c)
        assert contains(p, n - 1, "+")
        assert contains(q, n + 1, "-")


@pytest.mark.parametrize("n", [5, 13, 23])
def test_verify_membership(n):
    assert verify_membership(n)


def test_lemma_sym_small():
    assert verify_lemma_sym(2)
    assert verify_lemma_sym(6)


def test_lower_index_variant_breaks_identity():
    # x_p with C(1, 2i-p-1) in place of C(1, 2i-p+1) disagrees with the forward
    # differences of f and does not satisfy the identity
    k, i = 2, 1
    variant = Fraction(1, 2) * (binomial(1, 2 * i - 2) + binomial(2 * k - 1, 2 * i))
    assert variant != x_coeff(1, i, k)
    assert newton_expansion(symmetrization_f(i, k), 2 * k)[1] == x_coeff(1, i, k)


def test_identity_e_hand_case():
    # K = 2, i = j = 1: both sides equal 1 * [C(2,2) + C(2,1) - 1 + C(2,2) + C(2,1) - 1] = 4
    assert identity_e_sides(1, 1, 2) == (4, 4)


def test_x_coefficient_hand_values():
    # f(T) = T/2 [C(T,2) + C(4-T,2)]: f(0..3) = 0, 3/2, 2, 9/2
    assert [x_coeff(p, 1, 2) for p in range(5)] == [0, Fraction(3, 2), -1, 3, 0]


def test_x_coefficients_vanish_past_2i_plus_1():
    for i in range(1, 13):
        k = i + 3
        assert all(x_coeff(p, i, k) == 0 for p in range(2 * i + 2, 2 * k + 1))


@pytest.mark.parametrize("k", [2, 3, 5, 8, 12])
def test_x_coefficients_are_forward_differences(k):
    assert all(x_coeffs_match_differences(i, k) for i in range(1, k))


def test_newton_expansion_examples():
    assert newton_expansion(QPoly.monomial(2), 4) == [0, 1, 2, 0, 0]
    assert newton_expansion(QPoly((7,)), 3) == [7, 0, 0, 0]
    assert newton_expansion(binomial_poly(2), 4) == [0, 0, 1, 0, 0]
    with pytest.raises(ValueError):
        newton_expansion(QPoly.monomial(3), 2)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.fractions(min_value=-50, max_value=50, max_denominator=7), max_size=13))
def test_newton_reconstruction_exact(coeffs):
    f = QPoly(coeffs)
    assert newton_reconstruct(newton_expansion(f, 12)) == f


def test_lemma_suite_report():
    rep = lemma_suite(17)
    assert rep.ok
    assert rep.admissible_dim == 2
