# path: tests/test_connection.py

from fractions import Fraction
from math import factorial

import pytest

from matrix_gegenbauer.matrix.connection import (certify_over_nu, double_sum_check, f_matrix, g_matrix,
                                                 g_weight_symmetry_check, gamma_coeff, inversion_check,
                                                 m_coeff, m_expansion_check, nu_samples, phi_coeff,
                                                 scalar_consistency_check, shift_lemma_check, structure_check,
                                                 synthesis_check, synthesize_hat_p, term_count_check,
                                                 upper_triangular_shift_check)
from matrix_gegenbauer.matrix.mvop import gram_integral, hat_p, kappa_rational_part, symmetrizer
from matrix_gegenbauer.models import WeightSpec
from matrix_gegenbauer.polynomials.algebra import (identity_matrix, inverse_diagonal, is_diagonal,
                                                   is_zero_matrix, matrices_equal)
from matrix_gegenbauer.polynomials.gegenbauer import gegenbauer
from matrix_gegenbauer.polynomials.kernel import pochhammer


def test_gamma_parity_and_symmetry():
    mu = Fraction(7, 2)
    for two_ell in range(5):
        for i in range(two_ell + 1):
            for j in range(two_ell + 1):
                for k in range(two_ell + 1):
                    term = gamma_coeff(mu, i, j, k, two_ell)
                    if (i + j + k) % 2:
                        assert term.coeff == 0
                    assert term.relative_to(mu) == gamma_coeff(mu, j, i, k, two_ell).relative_to(mu)


def test_gamma_out_of_range_is_zero():
    assert gamma_coeff(Fraction(2), 3, 0, 1, 2).coeff == 0
    assert gamma_coeff(Fraction(2), 0, 0, -1, 2).coeff == 0


def test_phi_support():
    mu = Fraction(5, 2)
    assert phi_coeff(mu, 0, 1, 0, 2).coeff == 0
    assert phi_coeff(mu, 1, 1, 1, 2).coeff == 0
    assert phi_coeff(mu, 1, 1, 0, 2).coeff != 0


def test_f_zero_zero_is_symmetrizer(spec):
    assert matrices_equal(f_matrix(0, 0, spec), symmetrizer(0, spec))


def test_g_leading_term(spec):
    nu = spec.nu
    for m in range(7):
        expected = inverse_diagonal(symmetrizer(m, spec)) * (2 ** m * pochhammer(nu, m) / factorial(m))
        assert matrices_equal(g_matrix(0, m, spec), expected)


def test_g_zero_zero_inverts_symmetrizer(spec):
    assert matrices_equal(g_matrix(0, 0, spec) @ symmetrizer(0, spec), identity_matrix(spec.dim))


def test_coefficients_vanish_outside_range(spec):
    for n in range(6):
        assert is_zero_matrix(f_matrix(min(n, spec.two_ell) + 1, n, spec))
        assert is_zero_matrix(g_matrix(min(n, spec.two_ell) + 1, n, spec))
        assert is_zero_matrix(f_matrix(-1, n, spec))


@pytest.mark.parametrize("two_ell, n, nu", [(2, 5, Fraction(3, 2)), (1, 4, Fraction(1)), (3, 7, Fraction(7, 3))])
def test_synthesis_examples(two_ell, n, nu):
    spec = WeightSpec.of(two_ell, nu)
    assert synthesize_hat_p(n, spec) == hat_p(n, spec)


def test_synthesis_at_degree_zero(spec):
    assert synthesize_hat_p(0, spec) == hat_p(0, spec)


def test_middle_entry_is_a_two_term_sum():
    nu = Fraction(5, 2)
    spec = WeightSpec.of(2, nu)
    lam = spec.companion_lambda
    for n in range(2, 9):
        entry = synthesize_hat_p(n, spec).entry(1, 1)
        target = gegenbauer(n, lam) * (1 / (nu + n + 2)) + gegenbauer(n - 2, lam) * (1 / (nu + n))
        ratio = entry.leading / target.leading
        assert entry == target * ratio


@pytest.mark.slow
@pytest.mark.parametrize("two_ell", [1, 2, 3, 4])
def test_two_constructions_agree(two_ell, nu):
    spec = WeightSpec.of(two_ell, nu)
    for n in range(13):
        assert synthesis_check(n, spec).passed
        assert inversion_check(n, spec).passed


@pytest.mark.parametrize("two_ell, nu", [(2, Fraction(1)), (1, Fraction(3, 2)), (3, Fraction(1, 2))])
def test_inversion(two_ell, nu):
    spec = WeightSpec.of(two_ell, nu)
    for m in range(7):
        assert inversion_check(m, spec).passed


def test_m_expansion_examples():
    spec = WeightSpec.of(1, 2)
    assert m_expansion_check(4, spec).passed
    assert is_diagonal(m_coeff(0, 4, spec))


def test_double_sum_example():
    result = double_sum_check(1, 5, WeightSpec.of(2, Fraction(3, 2)))
    assert result.passed
    assert result.counterexample is None


def test_double_sum_grid(spec):
    for m in range(9):
        for s in range(m // 2 + 1):
            assert double_sum_check(s, m, spec).passed


def test_scalar_consistency(spec):
    for m in range(8):
        assert scalar_consistency_check(m, spec).passed


def test_shift_relations(spec):
    assert shift_lemma_check(spec, 6).passed
    assert upper_triangular_shift_check(spec, 3).passed


def test_structure_and_term_count(spec):
    for n in range(8):
        assert structure_check(n, spec).passed
        assert term_count_check(n, spec).passed
        assert g_weight_symmetry_check(n, spec).passed


def test_g_weight_symmetry_uses_shifted_weight():
    spec = WeightSpec.of(2, Fraction(1))
    g = g_matrix(1, 2, spec)

    def scaled_h0(at: WeightSpec):
        return kappa_rational_part(gram_integral(0, 0, at)) @ inverse_diagonal(symmetrizer(0, at))

    shifted = g @ scaled_h0(spec.shifted(1))
    assert matrices_equal(shifted, shifted.T)
    unshifted = g @ scaled_h0(spec)
    assert not matrices_equal(unshifted, unshifted.T)
    assert g_weight_symmetry_check(2, spec).passed


def test_certify_over_nu_reports_counterexample():
    result = certify_over_nu("demo", lambda nu: nu != Fraction(3, 2), 4)
    assert not result.passed
    assert result.counterexample == "nu=3/2"
    assert certify_over_nu("demo", lambda nu: True, 4).cells == 5
    assert nu_samples(3) == [Fraction(1, 2), Fraction(1), Fraction(3, 2)]
