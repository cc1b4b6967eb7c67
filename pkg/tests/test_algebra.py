# path: tests/test_algebra.py

from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from matrix_gegenbauer.polynomials.algebra import (GegSeries, MatPoly, MonoPoly, commutator, diagonal_matrix,
                                                   flip_matrix, identity_matrix, inverse_diagonal, is_diagonal,
                                                   matrices_equal, matrix_from_strings, matrix_to_strings,
                                                   mono_times_matrix, rat_matrix, zero_matrix)

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=7)
polys = st.lists(small_fractions, max_size=6).map(MonoPoly)


def test_monopoly_strips_trailing_zeros():
    poly = MonoPoly([1, 2, 0, 0])
    assert poly.coeffs == (Fraction(1), Fraction(2))
    assert poly.degree == 1
    assert MonoPoly().degree == -1
    assert MonoPoly([0, 0]).is_zero()


def test_monopoly_arithmetic():
    p = MonoPoly([1, 1])  # 1 + x
    q = MonoPoly([-1, 1])  # -1 + x
    assert p * q == MonoPoly([-1, 0, 1])
    assert p - q == MonoPoly.constant(2)
    assert (p ** 3).coeffs == (1, 3, 3, 1)
    assert p.shift(2) == MonoPoly([0, 0, 1, 1])
    assert MonoPoly([5, 3, 2]).derivative() == MonoPoly([3, 4])
    assert MonoPoly([1, 0, -1]).evaluate(Fraction(1, 2)) == Fraction(3, 4)


@given(polys, polys, small_fractions)
def test_monopoly_evaluation_is_a_ring_map(p, q, x):
    assert (p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x)
    assert (p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x)


def test_gegseries_parameter_guard():
    with pytest.raises(ValueError):
        GegSeries(1, [1]) + GegSeries(2, [1])
    assert (GegSeries(1, [1, 0, 2]) * 3).coeffs == (3, 0, 6)
    assert GegSeries(1, [0, 0, 2]).nonzero_terms() == 1


def test_rat_matrix_is_read_only():
    matrix = rat_matrix([[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        matrix[0, 0] = Fraction(5)


def test_matrix_helpers():
    d = diagonal_matrix([Fraction(2), Fraction(1, 3)])
    assert matrices_equal(d @ inverse_diagonal(d), identity_matrix(2))
    assert is_diagonal(d)
    flip = flip_matrix(3)
    assert matrices_equal(flip @ flip, identity_matrix(3))
    assert not is_diagonal(flip)
    assert matrices_equal(commutator(d, d), zero_matrix(2))
    assert matrix_to_strings(rat_matrix([[Fraction(1, 2), 3]])) == [["1/2", "3"]]
    assert matrices_equal(matrix_from_strings([["1/2", "-3"]]), rat_matrix([[Fraction(1, 2), -3]]))


def test_matpoly_products():
    a = rat_matrix([[0, 1], [0, 0]])
    b = rat_matrix([[0, 0], [1, 0]])
    x_a = MatPoly([zero_matrix(2), a], 2)  # x * a
    const_b = MatPoly.constant(b)
    assert (x_a @ const_b).coefficient(1)[0, 0] == 1
    assert (const_b @ x_a).coefficient(1)[1, 1] == 1
    assert (x_a @ x_a).is_zero()
    assert x_a.mul_x().degree == 2
    assert x_a.derivative() == MatPoly.constant(a)
    assert x_a.transpose() == MatPoly([zero_matrix(2), b], 2)


def test_matpoly_entries_round_trip():
    entries = [[MonoPoly([1, 2]), MonoPoly()], [MonoPoly([0, 0, 3]), MonoPoly.constant(-1)]]
    poly = MatPoly.from_entries(entries)
    assert poly.degree == 2
    assert poly.entry(1, 0) == MonoPoly([0, 0, 3])
    assert poly.entry(0, 1).is_zero()


def test_matpoly_size_mismatch():
    with pytest.raises(ValueError):
        MatPoly([identity_matrix(3)], 2)


def test_mono_times_matrix():
    poly = mono_times_matrix(MonoPoly([1, 1]), identity_matrix(2))
    assert poly.entry(0, 0) == MonoPoly([1, 1])
    assert poly.entry(0, 1).is_zero()
    assert poly.scale(2).entry(1, 1) == MonoPoly([2, 2])
