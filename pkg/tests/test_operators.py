# path: tests/test_operators.py

from fractions import Fraction

import pytest

from matrix_gegenbauer.matrix.mvop import hat_p, monic_p, symmetrizer
from matrix_gegenbauer.matrix.operators import (apply_dod, apply_doe, certify_six_term_size, dod_eigenvalue,
                                                dod_spec, doe_eigenvalue, doe_spec, eigen_check, hat_recurrence,
                                                prop_3tr_check, prop_dod_check, prop_doe_check,
                                                six_term_cells, six_term_degree_bound, six_term_gamma_check,
                                                six_term_terms)
from matrix_gegenbauer.models import WeightSpec
from matrix_gegenbauer.polynomials.algebra import (MatPoly, diagonal_matrix, freeze, identity_matrix, is_diagonal,
                                                   matrices_equal, rat_matrix, zero_matrix)


def test_operator_matrices():
    spec = WeightSpec.of(3, Fraction(3, 2))
    ops = dod_spec(spec).matrices
    assert matrices_equal(ops['V'], rat_matrix([[0, 0, 0, 0], [0, -2, 0, 0], [0, 0, -2, 0], [0, 0, 0, 0]]))
    assert ops['C'][0, 1] == 3 and ops['C'][1, 0] == 1 and ops['C'][2, 1] == 2
    doe = doe_spec(spec).matrices
    assert is_diagonal(doe['B1']) and is_diagonal(doe['A0'])
    scaled = doe['B0'] * 3
    assert scaled[0, 1] == 3 and scaled[2, 3] == 1 and scaled[1, 0] == -1 and scaled[3, 2] == -3


def test_first_order_operator_needs_positive_size():
    with pytest.raises(ValueError):
        doe_spec(WeightSpec.of(0, 1))


def test_dod_on_constants(spec):
    d_0 = symmetrizer(0, spec)
    v = dod_spec(spec).matrices['V']
    assert apply_dod(MatPoly.constant(d_0), spec) == MatPoly.constant(-(d_0 @ v))


def test_dod_is_linear():
    spec = WeightSpec.of(2, Fraction(7, 3))
    p, q = hat_p(3, spec), monic_p(4, spec)
    assert apply_dod(p + q, spec) == apply_dod(p, spec) + apply_dod(q, spec)


def test_doe_on_degree_zero():
    spec = WeightSpec.of(2, Fraction(1, 2))
    d_0 = symmetrizer(0, spec)
    a0 = doe_spec(spec).matrices['A0']
    assert apply_doe(hat_p(0, spec), spec) == MatPoly.constant(d_0 @ a0)
    assert matrices_equal(doe_eigenvalue(0, spec), a0)


@pytest.mark.parametrize("two_ell", [0, 1, 2, 3])
def test_eigen_relations(two_ell, nu):
    spec = WeightSpec.of(two_ell, nu)
    for n in range(11):
        assert eigen_check(n, spec).passed
        assert eigen_check(n, spec, monic=True).passed


def test_dod_eigenvalue_formula():
    spec = WeightSpec.of(2, Fraction(1))
    value = dod_eigenvalue(3, spec)
    assert [value[i, i] for i in range(3)] == [-21, -20, -21]


@pytest.mark.parametrize("two_ell, nu, x_squared", [
    (1, Fraction(1, 2), [-8, -8]),
    (2, Fraction(1), [-12, -11, -12]),
])
def test_dod_on_x_squared(two_ell, nu, x_squared):
    spec = WeightSpec.of(two_ell, nu)
    size = spec.dim
    square = MatPoly([zero_matrix(size), zero_matrix(size), identity_matrix(size)], size)
    c = dod_spec(spec).matrices['C']
    expected = MatPoly([identity_matrix(size) * 2, c * 2, diagonal_matrix(x_squared)], size)
    assert apply_dod(square, spec) == expected


def test_doe_on_x():
    spec = WeightSpec.of(1, Fraction(1))
    linear = MatPoly([zero_matrix(2), identity_matrix(2)], 2)
    expected = MatPoly([rat_matrix([[0, 1], [-1, 0]]), diagonal_matrix([-4, 1])], 2)
    assert apply_doe(linear, spec) == expected


@pytest.mark.parametrize("check, two_ell, n, nu", [
    (prop_3tr_check, 2, 4, Fraction(1)),
    (prop_dod_check, 1, 5, Fraction(3, 2)),
    (prop_doe_check, 2, 6, Fraction(1)),
])
def test_relation_examples(check, two_ell, n, nu):
    assert check(n, WeightSpec.of(two_ell, nu)).passed


def test_scalar_degeneration():
    spec = WeightSpec.of(0, Fraction(3, 2))
    for n in range(6):
        assert prop_3tr_check(n, spec).passed
        assert prop_dod_check(n, spec).passed
        result = prop_doe_check(n, spec)
        assert result.passed and result.cells == 0


def test_tampered_recurrence_is_detected():
    spec = WeightSpec.of(2, Fraction(1))
    _, b_hat, _ = hat_recurrence(4, spec)
    tampered = b_hat.copy()
    tampered[0, 1] = tampered[0, 1] + 1
    assert not prop_3tr_check(4, spec, freeze(tampered)).passed


@pytest.mark.parametrize("two_ell", [1, 2, 3])
def test_relations_grid(two_ell, nu):
    spec = WeightSpec.of(two_ell, nu)
    for n in range(11):
        assert prop_3tr_check(n, spec).passed
        assert prop_dod_check(n, spec).passed
        assert prop_doe_check(n, spec).passed


def test_six_term_example():
    assert six_term_gamma_check(Fraction(1, 2), 3, 1, 1, 1, 2)


def test_six_term_parity_terms_vanish():
    values = six_term_terms(Fraction(1), 4, 1, 1, 0, 2)
    assert all(v == 0 for v in values.left + values.right)


@pytest.mark.parametrize("two_ell", [1, 2, 3])
def test_six_term_beyond_size(two_ell, nu):
    for n in (two_ell + 1, two_ell + 2):
        for i in range(two_ell + 1):
            for j in range(two_ell + 1):
                for k in range(two_ell + 1):
                    assert six_term_gamma_check(nu, n, i, j, k, two_ell)


def test_six_term_cells():
    assert six_term_cells(0) == []
    assert len(six_term_cells(1)) == 4
    assert len(six_term_cells(2)) == 13
    assert all((i + j + k) % 2 for i, j, k in six_term_cells(3))


def test_six_term_certification_two_by_two():
    results = certify_six_term_size(1)
    assert len(results) == 8
    assert all(r.passed for r in results)
    assert results[0].cells == six_term_degree_bound(1, 2) + 1


@pytest.mark.slow
@pytest.mark.parametrize("two_ell", [2, 3])
def test_six_term_certification(two_ell):
    assert six_term_degree_bound(2, 3) == 6 * (12 + 6 + 3)
    results = certify_six_term_size(two_ell)
    assert len(results) == 2 * len(six_term_cells(two_ell))
    assert all(r.passed for r in results), [r.name for r in results if not r.passed]
