# path: tests/test_gegenbauer.py

import math
from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from matrix_gegenbauer.models import KappaValue
from matrix_gegenbauer.polynomials.algebra import GegSeries, MonoPoly
from matrix_gegenbauer.polynomials.gegenbauer import (ParameterMismatchError, connect_integer,
                                                      connect_integer_series, diff_geg, geg_to_mono, gegenbauer,
                                                      hypergeometric_oracle, inner_product, linearise,
                                                      mono_to_geg, series_product, value_at_one)
from matrix_gegenbauer.polynomials.kernel import UnsupportedParameterError

LAMBDAS = [Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2), Fraction(7, 3)]


def test_gegenbauer_small_degrees():
    assert gegenbauer(0, Fraction(3, 2)) == MonoPoly.constant(1)
    assert gegenbauer(1, Fraction(2)) == MonoPoly([0, 4])
    assert gegenbauer(2, Fraction(1)) == MonoPoly([-1, 0, 4])


@pytest.mark.parametrize("lam", LAMBDAS)
def test_recurrence_matches_hypergeometric_sum(lam):
    for n in range(16):
        assert gegenbauer(n, lam) == hypergeometric_oracle(n, lam)


@pytest.mark.parametrize("lam", [Fraction(0), Fraction(-1, 2), Fraction(-3)])
def test_unsupported_parameters(lam):
    with pytest.raises(UnsupportedParameterError):
        gegenbauer(3, lam)


def test_negative_parameter_above_minus_half_is_accepted():
    assert gegenbauer(2, Fraction(-1, 4)).degree == 2


@pytest.mark.parametrize("lam", LAMBDAS)
def test_parity_and_value_at_one(lam):
    for n in range(10):
        poly = gegenbauer(n, lam)
        assert all(c == 0 for d, c in enumerate(poly.coeffs) if (d - n) % 2)
        assert poly.evaluate(1) == value_at_one(n, lam)


def test_mono_to_geg_examples():
    assert mono_to_geg(MonoPoly.constant(1), Fraction(1)).coeffs == (1,)
    assert mono_to_geg(MonoPoly([0, 1]), Fraction(2)).coeffs == (0, Fraction(1, 4))
    # x^2 = (C_2^(1) + C_0) / 4
    assert mono_to_geg(MonoPoly([0, 0, 1]), Fraction(1)).coeffs == (Fraction(1, 4), 0, Fraction(1, 4))


@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=5), max_size=13),
       st.sampled_from([Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(7, 3)]))
def test_basis_conversion_is_exact(coeffs, lam):
    poly = MonoPoly(coeffs)
    series = mono_to_geg(poly, lam)
    assert series.degree == poly.degree
    assert geg_to_mono(series) == poly


def test_connect_integer_examples():
    assert connect_integer(5, Fraction(3, 2), 0) == [1]
    assert len(connect_integer(1, Fraction(1), 4)) == 1


@pytest.mark.parametrize("nu", [Fraction(1, 2), Fraction(1), Fraction(7, 3)])
def test_connect_integer_reproduces_source(nu):
    for m in range(13):
        for big_n in range(5):
            assert geg_to_mono(connect_integer_series(m, nu, big_n)) == gegenbauer(m, nu)


def test_linearise_examples():
    assert linearise(0, 4, Fraction(3, 2)).coeffs == (0, 0, 0, 0, 1)
    assert linearise(1, 1, Fraction(1)).coeffs == (1, 0, 1)


@pytest.mark.parametrize("lam", [Fraction(1, 2), Fraction(3, 2), Fraction(7, 3)])
def test_linearise_matches_product(lam):
    for k in range(7):
        for l in range(k, 7):
            series = linearise(k, l, lam)
            assert geg_to_mono(series) == gegenbauer(k, lam) * gegenbauer(l, lam)
            total = sum((c * value_at_one(d, lam) for d, c in enumerate(series.coeffs)), Fraction(0))
            assert total == value_at_one(k, lam) * value_at_one(l, lam)


def test_series_product_and_guard():
    lam = Fraction(3, 2)
    first, second = GegSeries(lam, [1, 2]), GegSeries(lam, [0, 1, 1])
    assert geg_to_mono(series_product(first, second)) == geg_to_mono(first) * geg_to_mono(second)
    with pytest.raises(ParameterMismatchError):
        series_product(first, GegSeries(1, [1]))


def test_diff_geg():
    lam = Fraction(5, 2)
    assert diff_geg(GegSeries(lam, [1])).is_zero()
    assert diff_geg(GegSeries(lam, [0, 1])) == GegSeries(lam + 1, [2 * lam])
    series = GegSeries(lam, [1, -2, 0, Fraction(1, 3), 4])
    assert geg_to_mono(diff_geg(series)) == geg_to_mono(series).derivative()


@pytest.mark.parametrize("lam", [Fraction(1, 2), Fraction(1), Fraction(7, 3)])
def test_orthogonality(lam):
    for k in range(13):
        for n in range(13):
            value = inner_product(GegSeries(lam, [0] * k + [1]), GegSeries(lam, [0] * n + [1]))
            assert value.is_zero() == (k != n)


def test_inner_product_values():
    assert inner_product(GegSeries(1, [1]), GegSeries(1, [1])) == KappaValue(coeff=Fraction(1), nu=Fraction(1))
    assert inner_product(GegSeries(1, [0, 0, 1]), GegSeries(1, [0, 0, 1])).coeff == 1
    lam = Fraction(3, 2)
    assert inner_product(GegSeries(lam, [1]), GegSeries(lam, [1])).coeff == 1 / lam
    assert inner_product(GegSeries(lam, [1]), GegSeries(lam, [1])).to_float() == pytest.approx(4 / 3)
    assert inner_product(GegSeries(1, [1]), GegSeries(1, [1])).to_float() == pytest.approx(math.pi / 2)
    with pytest.raises(ParameterMismatchError):
        inner_product(GegSeries(1, [1]), GegSeries(2, [1]))
