# path: tests/test_generating.py

from fractions import Fraction

import pytest
import sympy

from matrix_gegenbauer.matrix import generating
from matrix_gegenbauer.matrix.generating import (NU, T, X, InterpolationMismatchError, SeriesMismatchError,
                                                  closed_form, expand_closed_form, lambda_degree,
                                                  numerator_expressions, numerator_is_integral, poly_in_lambda,
                                                  series_coefficients, tilde_f, verification_order)
from matrix_gegenbauer.models import ClosedForm, Trivariate, WeightSpec
from matrix_gegenbauer.polynomials.algebra import diagonal_matrix, matrices_equal, rat_matrix


def _size_three_numerator():
    u = 1 - 2 * X * T + T ** 2
    big = NU + 2
    edge = -2 * big * T * (1 - T ** 2)
    corner = big * T ** 2 * (1 - T ** 2) + T ** 2 * u
    return [
        [big * (1 - T ** 2) - u, edge, corner],
        [edge, 2 * big * (1 - T ** 2) - 4 * u + 2 * big * T ** 2 * (1 - T ** 2) + 4 * T ** 2 * u, edge],
        [corner, edge, big * (1 - T ** 2) - u],
    ]


def test_lambda_degree():
    assert [lambda_degree(v) for v in range(5)] == [0, 0, 1, 2, 3]


def test_tilde_f_size_three():
    nu = Fraction(3, 2)
    spec = WeightSpec.of(2, nu)
    for n in range(2, 7):
        lam = nu + 2 + n
        assert matrices_equal(tilde_f(0, n, spec), diagonal_matrix([lam - 1, 2 * lam - 4, lam - 1]))
        lam = nu + 2 + n - 1
        edge = -2 * lam
        assert matrices_equal(tilde_f(1, n, spec), rat_matrix([[0, edge, 0], [edge, 0, edge], [0, edge, 0]]))
        lam = nu + 2 + n - 2
        expected = rat_matrix([[0, 0, lam + 1], [0, 2 * lam + 4, 0], [lam + 1, 0, 0]])
        assert matrices_equal(tilde_f(2, n, spec), expected)


def test_poly_in_lambda_size_three():
    coeffs = poly_in_lambda(0, WeightSpec.of(2, Fraction(1)))
    assert coeffs[0][0] == [-1, 1]
    assert coeffs[1][1] == [-4, 2]
    assert coeffs[0][1] == [0, 0]


def test_poly_in_lambda_is_constant_for_two_by_two(nu):
    spec = WeightSpec.of(1, nu)
    for k in range(2):
        coeffs = poly_in_lambda(k, spec)
        assert all(len(entry) == 1 for row in coeffs for entry in row)


def test_poly_in_lambda_detects_wrong_degree():
    with pytest.raises(InterpolationMismatchError):
        poly_in_lambda(0, WeightSpec.of(2, Fraction(1)), degree=0)


def test_poly_in_lambda_is_independent_of_nu():
    first = poly_in_lambda(1, WeightSpec.of(3, Fraction(1, 2)))
    second = poly_in_lambda(1, WeightSpec.of(3, Fraction(7, 3)))
    assert first == second


@pytest.mark.parametrize("two_ell", [1, 2, 3])
def test_tilde_f_depends_on_nu_plus_n(two_ell):
    spec = WeightSpec.of(two_ell, Fraction(1, 2))
    raised = spec.shifted(1)
    for n in range(1, two_ell + 3):
        for k in range(min(n - 1, two_ell) + 1):
            assert matrices_equal(tilde_f(k, n, spec), tilde_f(k, n - 1, raised))
    assert not matrices_equal(tilde_f(1, 1, spec), tilde_f(1, 0, raised))


def test_series_parity(spec):
    for n, coefficient in enumerate(series_coefficients(spec, 8)):
        assert coefficient.degree == n
        for i in range(spec.dim):
            for j in range(spec.dim):
                entry = coefficient.entry(i, j)
                assert all(c == 0 for d, c in enumerate(entry.coeffs) if (d + n + i + j) % 2)


def test_series_coefficients_negative_order():
    with pytest.raises(ValueError):
        series_coefficients(WeightSpec.of(1, 1), -1)


def test_scalar_closed_form():
    form = closed_form(WeightSpec.of(0, Fraction(3, 2)))
    assert form.denominator_offset == 0
    assert form.numerator[0][0].coeffs == [[[Fraction(1)]]]


def test_size_three_numerator():
    actual = numerator_expressions(WeightSpec.of(2, Fraction(5, 2)))
    golden = _size_three_numerator()
    for i in range(3):
        for j in range(3):
            assert sympy.expand(actual[i][j] - golden[i][j]) == 0


@pytest.mark.parametrize("two_ell", [0, 1, 2])
def test_closed_form_is_integral(two_ell, nu):
    form = closed_form(WeightSpec.of(two_ell, nu))
    assert form.denominator_offset == two_ell + lambda_degree(two_ell)
    assert form.verified_order >= 2 * two_ell + 6
    assert numerator_is_integral(form)


@pytest.mark.slow
@pytest.mark.parametrize("two_ell", [3, 4])
def test_closed_form_larger_sizes(two_ell):
    form = closed_form(WeightSpec.of(two_ell, Fraction(3, 2)))
    assert form.verified_order == verification_order(two_ell)


def test_closed_form_transfers_to_other_parameters():
    form = closed_form(WeightSpec.of(2, Fraction(1)))
    for nu in (Fraction(1, 2), Fraction(7, 3)):
        expected = series_coefficients(WeightSpec.of(2, nu), 10)
        assert expand_closed_form(form, nu, 10) == expected


def test_tampered_closed_form_is_rejected():
    spec = WeightSpec.of(1, Fraction(3, 2))
    form = closed_form(spec)
    numerator = [list(row) for row in form.numerator]
    coeffs = [[list(r) for r in plane] for plane in numerator[0][0].coeffs]
    coeffs[0][0][0] += 1
    numerator[0][0] = Trivariate(coeffs=coeffs)
    tampered = ClosedForm(**{**form.model_dump(), 'numerator': numerator})
    assert expand_closed_form(tampered, spec.nu, 4) != series_coefficients(spec, 4)


def test_closed_form_order_mismatch_raises(monkeypatch):
    original = generating.series_coefficients

    def shifted(spec, order):
        series = original(spec, order)
        return series[:-1] + [series[-1].scale(2)]

    monkeypatch.setattr(generating, 'series_coefficients', shifted)
    with pytest.raises(SeriesMismatchError):
        closed_form(WeightSpec.of(1, Fraction(1)), order=5)
