# path: tests/test_roots.py

import math
from fractions import Fraction

import pytest

from matrix_gegenbauer.polynomials.algebra import MonoPoly
from matrix_gegenbauer.polynomials.gegenbauer import gegenbauer
from matrix_gegenbauer.zeros.roots import (DegreeTooLargeError, find_roots, is_even, strip_zero_root,
                                           trailing_zeros)


def test_real_pair():
    roots = find_roots(MonoPoly([-1, 0, 1]))
    assert [r.re for r in roots] == pytest.approx([-1, 1])
    assert all(r.im == 0 for r in roots)


def test_imaginary_pair():
    roots = find_roots(MonoPoly([Fraction(1, 4), 0, 1]))
    assert [r.re for r in roots] == pytest.approx([0, 0], abs=1e-12)
    assert [r.im for r in roots] == pytest.approx([-0.5, 0.5])


def test_general_cubic():
    # (x + 2)(x - 1/3)(x - 1/2)
    poly = MonoPoly([Fraction(1, 3), Fraction(-3, 2), Fraction(7, 6), 1])
    roots = find_roots(poly, seed=7)
    assert [r.re for r in roots] == pytest.approx([-2, 1 / 3, 1 / 2])
    assert all(abs(r.im) < 1e-12 for r in roots)
    assert all(r.residual < 1e-9 for r in roots)


def test_zero_root_is_split_off():
    poly = gegenbauer(3, Fraction(2))
    assert trailing_zeros(poly) == 1
    assert is_even(strip_zero_root(poly))
    roots = find_roots(poly)
    expected = math.sqrt(3 / 8)
    assert [r.re for r in roots] == pytest.approx([-expected, 0, expected], abs=1e-12)


def test_gegenbauer_roots_are_real_and_symmetric():
    roots = find_roots(gegenbauer(12, Fraction(5, 2)), seed=3)
    assert len(roots) == 12
    assert all(abs(r.im) < 1e-10 and -1 < r.re < 1 for r in roots)
    values = sorted(r.re for r in roots)
    assert values == pytest.approx([-v for v in reversed(values)], abs=1e-12)


def test_results_do_not_depend_on_seed():
    poly = gegenbauer(9, Fraction(3, 2))
    first = [r.re for r in find_roots(poly, seed=1)]
    second = [r.re for r in find_roots(poly, seed=99)]
    assert first == pytest.approx(second, abs=1e-14)


def test_degree_limits():
    with pytest.raises(DegreeTooLargeError):
        find_roots(gegenbauer(6, Fraction(1)), max_degree=5)
    with pytest.raises(ValueError):
        find_roots(MonoPoly.constant(3))
