# path: matrix_gegenbauer/polynomials/gegenbauer.py

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import List

import structlog

from matrix_gegenbauer.models import KappaValue
from matrix_gegenbauer.polynomials.algebra import GegSeries, MonoPoly
from matrix_gegenbauer.polynomials.kernel import (UnsupportedParameterError, as_rational, format_rational,
                                                  pochhammer)

logger = structlog.get_logger()

_HALF = Fraction(1, 2)


class ParameterMismatchError(ValueError):
    """Raised when two Gegenbauer series with different parameters are combined."""


def check_parameter(lam: Fraction) -> Fraction:
    """
    Validate a Gegenbauer parameter.

    :param lam: (Fraction) Candidate parameter.
    :return: (Fraction) The parameter as a Fraction.
    :raises UnsupportedParameterError: For lambda = 0 or lambda <= -1/2.
    """
    lam = as_rational(lam)
    if lam == 0:
        raise UnsupportedParameterError("lambda = 0 needs a different normalisation and is not supported")
    if lam <= -_HALF:
        raise UnsupportedParameterError(f"lambda must exceed -1/2, got {format_rational(lam)}")
    return lam


@lru_cache(maxsize=8192)
def _gegenbauer(n: int, lam: Fraction) -> MonoPoly:
    if n == 0:
        return MonoPoly.constant(1)
    if n == 1:
        return MonoPoly([0, 2 * lam])
    # (n+1) C_{n+1} = 2(n+lam) x C_n - (n+2lam-1) C_{n-1}, shifted down by one
    m = n - 1
    previous, current = _gegenbauer(m - 1, lam), _gegenbauer(m, lam)
    return (current.shift(1) * (2 * (m + lam)) - previous * (m + 2 * lam - 1)) * Fraction(1, m + 1)


def gegenbauer(n: int, lam: Fraction) -> MonoPoly:
    """
    Scalar Gegenbauer polynomial C_n^(lam) in the monomial basis, via the three-term recurrence.

    :param n: (int) Degree, nonnegative.
    :param lam: (Fraction) Parameter, lambda > -1/2 and lambda != 0.
    :return: (MonoPoly) Degree-n polynomial with leading coefficient 2^n (lam)_n / n!.
    """
    if n < 0:
        raise ValueError(f"Degree must be nonnegative, got {n}")
    lam = check_parameter(lam)
    # warm the cache bottom-up so deep degrees never recurse far
    for degree in range(0, n, 64):
        _gegenbauer(degree, lam)
    return _gegenbauer(n, lam)


def hypergeometric_oracle(n: int, lam: Fraction) -> MonoPoly:
    """
    C_n^(lam) from the terminating sum (2lam)_n/n! 2F1(-n, 2lam+n; lam+1/2; (1-x)/2).
    """
    lam = check_parameter(lam)
    argument = MonoPoly([_HALF, -_HALF])
    total = MonoPoly()
    power = MonoPoly.constant(1)
    for k in range(n + 1):
        weight = pochhammer(Fraction(-n), k) * pochhammer(2 * lam + n, k) / (factorial(k) * pochhammer(lam + _HALF, k))
        total = total + power * weight
        power = power * argument
    return total * (pochhammer(2 * lam, n) / factorial(n))


def value_at_one(n: int, lam: Fraction) -> Fraction:
    """C_n^(lam)(1) = (2 lam)_n / n!."""
    return pochhammer(2 * Fraction(lam), n) / factorial(n)


def mono_to_geg(poly: MonoPoly, lam: Fraction) -> GegSeries:
    """
    Re-expand a monomial-basis polynomial in the C^(lam) basis.

    :param poly: (MonoPoly) Polynomial to convert.
    :param lam: (Fraction) Target parameter.
    :return: (GegSeries) Series with the same degree.
    """
    lam = check_parameter(lam)
    remainder = poly
    coeffs = [Fraction(0)] * (poly.degree + 1)
    while not remainder.is_zero():
        degree = remainder.degree
        basis = gegenbauer(degree, lam)
        factor = remainder.leading / basis.leading
        coeffs[degree] = factor
        remainder = remainder - basis * factor
    return GegSeries(lam, coeffs)


def geg_to_mono(series: GegSeries) -> MonoPoly:
    total = MonoPoly()
    for degree, c in enumerate(series.coeffs):
        if c:
            total = total + gegenbauer(degree, series.lam) * c
    return total


def connect_integer(m: int, nu: Fraction, big_n: int) -> List[Fraction]:
    """
    Coefficients c_s with C_m^(nu) = sum_s c_s C_{m-2s}^(nu+N), s = 0..min(m//2, N).

    :param m: (int) Degree.
    :param nu: (Fraction) Source parameter, positive.
    :param big_n: (int) Nonnegative integer shift N.
    :return: (List[Fraction]) The coefficients indexed by s.
    """
    nu = as_rational(nu)
    target = nu + big_n
    coeffs = []
    for s in range(min(m // 2, big_n) + 1):
        coeffs.append((target + m - 2 * s) * pochhammer(nu, m - s) / pochhammer(target, m - s + 1)
                      * pochhammer(Fraction(-big_n), s) / factorial(s))
    return coeffs


def connect_integer_series(m: int, nu: Fraction, big_n: int) -> GegSeries:
    coeffs = [Fraction(0)] * (m + 1)
    for s, c in enumerate(connect_integer(m, nu, big_n)):
        coeffs[m - 2 * s] = c
    return GegSeries(as_rational(nu) + big_n, coeffs)


@lru_cache(maxsize=16384)
def linearise(k: int, l: int, lam: Fraction) -> GegSeries:
    """
    Expand the product C_k^(lam) C_l^(lam) in the C^(lam) basis.

    :param k: (int) First degree.
    :param l: (int) Second degree.
    :param lam: (Fraction) Positive parameter.
    :return: (GegSeries) Coefficients on degrees k+l-2p, p = 0..min(k, l).
    """
    lam = as_rational(lam)
    coeffs = [Fraction(0)] * (k + l + 1)
    for p in range(min(k, l) + 1):
        top = k + l - p
        bottom = k + l - 2 * p
        c = (Fraction(bottom) + lam) / (top + lam)
        c *= pochhammer(lam, p) * pochhammer(lam, k - p) * pochhammer(lam, l - p) * pochhammer(2 * lam, top)
        c /= factorial(p) * factorial(k - p) * factorial(l - p) * pochhammer(lam, top)
        c *= Fraction(factorial(bottom)) / pochhammer(2 * lam, bottom)
        coeffs[bottom] = c
    return GegSeries(lam, coeffs)


def series_product(first: GegSeries, second: GegSeries) -> GegSeries:
    """Product of two series at the same parameter, kept in that basis."""
    if first.lam != second.lam:
        raise ParameterMismatchError(
            f"Series parameters differ: {format_rational(first.lam)} vs {format_rational(second.lam)}")
    coeffs = [Fraction(0)] * max(first.degree + second.degree + 1, 0)
    for k, a in enumerate(first.coeffs):
        if not a:
            continue
        for l, b in enumerate(second.coeffs):
            if not b:
                continue
            for degree, c in enumerate(linearise(min(k, l), max(k, l), first.lam).coeffs):
                if c:
                    coeffs[degree] += a * b * c
    return GegSeries(first.lam, coeffs)


def diff_geg(series: GegSeries) -> GegSeries:
    """d/dx C_n^(lam) = 2 lam C_{n-1}^(lam+1), applied term by term."""
    return GegSeries(series.lam + 1, (2 * series.lam * c for c in series.coeffs[1:]))


def norm_coefficient(n: int, lam: Fraction) -> Fraction:
    """<C_n, C_n> / kappa(lam) = (2lam)_n / ((n+lam) n!)."""
    return pochhammer(2 * lam, n) / ((n + lam) * factorial(n))


def inner_product(first: GegSeries, second: GegSeries) -> KappaValue:
    """
    Exact integral of first * second against (1-x^2)^(lam-1/2) on (-1, 1).

    :param first: (GegSeries) Left factor.
    :param second: (GegSeries) Right factor, same parameter.
    :return: (KappaValue) The integral as a rational multiple of kappa(lam).
    :raises ParameterMismatchError: If the parameters differ.
    """
    if first.lam != second.lam:
        raise ParameterMismatchError(
            f"Series parameters differ: {format_rational(first.lam)} vs {format_rational(second.lam)}")
    lam = first.lam
    total = Fraction(0)
    for n in range(min(len(first.coeffs), len(second.coeffs))):
        if first.coeffs[n] and second.coeffs[n]:
            total += first.coeffs[n] * second.coeffs[n] * norm_coefficient(n, lam)
    return KappaValue(coeff=total, nu=lam)


def weighted_integral(series: GegSeries) -> KappaValue:
    """Integral of the series itself, i.e. its pairing with C_0."""
    return inner_product(series, GegSeries(series.lam, [1]))
