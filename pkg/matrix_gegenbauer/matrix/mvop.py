# path: matrix_gegenbauer/matrix/mvop.py

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import List, Tuple

import numpy as np
import structlog

from matrix_gegenbauer.matrix.weight import weight_entry
from matrix_gegenbauer.models import KappaValue, WeightSpec
from matrix_gegenbauer.polynomials.algebra import (GegSeries, MatPoly, diagonal_matrix, identity_matrix,
                                                   matrix_from_function, zero_matrix)
from matrix_gegenbauer.polynomials.gegenbauer import (inner_product, mono_to_geg, norm_coefficient,
                                                      series_product)
from matrix_gegenbauer.polynomials.kernel import binomial, pochhammer

logger = structlog.get_logger()

KappaMatrix = List[List[KappaValue]]


@lru_cache(maxsize=4096)
def recurrence_coeffs(n: int, spec: WeightSpec) -> Tuple[np.ndarray, np.ndarray]:
    """
    Coefficients of x P_n = P_{n+1} + B_n P_n + C_n P_{n-1} for the monic polynomials.

    :param n: (int) Degree, nonnegative.
    :param spec: (WeightSpec) Weight parameters.
    :return: (Tuple[np.ndarray, np.ndarray]) B_n (off-diagonal) and C_n (diagonal).
    """
    two_ell, nu = spec.two_ell, spec.nu

    def b_entry(row: int, col: int) -> Fraction:
        if col == row - 1:
            j = row
            return j * (j + nu - 1) / (2 * (j + n + nu - 1) * (j + n + nu))
        if col == row + 1:
            j = row
            return (two_ell - j) * (two_ell - j + nu - 1) / (2 * (two_ell - j + n + nu - 1) * (two_ell + n - j + nu))
        return Fraction(0)

    b = matrix_from_function(spec.dim, b_entry)
    if n == 0:
        return b, zero_matrix(spec.dim)
    c = diagonal_matrix([
        n * (n + nu - 1) * (two_ell + n + nu) * (two_ell + n + 2 * nu - 1)
        / (4 * (two_ell + n + nu - j - 1) * (two_ell + n + nu - j) * (j + n + nu - 1) * (j + n + nu))
        for j in range(spec.dim)
    ])
    return b, c


@lru_cache(maxsize=4096)
def monic_p(n: int, spec: WeightSpec) -> MatPoly:
    """
    Monic matrix Gegenbauer polynomial P_n from P_{-1} = 0, P_0 = 1 and the three-term recurrence.
    """
    if n < 0:
        return MatPoly.zero(spec.dim)
    if n == 0:
        return MatPoly.constant(identity_matrix(spec.dim))
    previous, older = monic_p(n - 1, spec), monic_p(n - 2, spec)
    b, c = recurrence_coeffs(n - 1, spec)
    return previous.mul_x() - previous.lmul(b) - older.lmul(c)


@lru_cache(maxsize=4096)
def symmetrizer(n: int, spec: WeightSpec) -> np.ndarray:
    """D_n = diag(binom(2l, i) (nu+n)_i / (nu+n+2l-i)_i); depends on nu+n only."""
    base = spec.nu + n
    return diagonal_matrix([binomial(spec.two_ell, i) * pochhammer(base, i) / pochhammer(base + spec.two_ell - i, i)
                            for i in range(spec.dim)])


@lru_cache(maxsize=4096)
def hat_p(n: int, spec: WeightSpec) -> MatPoly:
    """Symmetric polynomial D_n P_n."""
    if n < 0:
        return MatPoly.zero(spec.dim)
    return monic_p(n, spec).lmul(symmetrizer(n, spec))


def geg_entries(poly: MatPoly, lam: Fraction) -> List[List[GegSeries]]:
    return [[mono_to_geg(poly.entry(i, j), lam) for j in range(poly.size)] for i in range(poly.size)]


def _weight_series(spec: WeightSpec) -> List[List[GegSeries]]:
    return [[weight_entry(i, j, spec) for j in range(spec.dim)] for i in range(spec.dim)]


def _zero_series(lam: Fraction) -> GegSeries:
    return GegSeries(lam, [])


def gram_integral(n: int, m: int, spec: WeightSpec) -> KappaMatrix:
    """
    Exact integral of hatP_n W hatP_m^t over (-1, 1), entry-wise in kappa(nu) units.

    Entries are pushed into the C^(nu) basis, multiplied with linearise and paired
    with innerProduct.

    :param n: (int) Left degree.
    :param m: (int) Right degree.
    :param spec: (WeightSpec) Weight parameters.
    :return: (KappaMatrix) Matrix of KappaValue.
    """
    nu, dim = spec.nu, spec.dim
    left = geg_entries(hat_p(n, spec), nu)
    right = geg_entries(hat_p(m, spec), nu)
    weight = _weight_series(spec)
    # left times weight, still as series
    product = [[_zero_series(nu) for _ in range(dim)] for _ in range(dim)]
    for i in range(dim):
        for q in range(dim):
            acc = _zero_series(nu)
            for p in range(dim):
                if left[i][p].is_zero() or weight[p][q].is_zero():
                    continue
                acc = acc + series_product(left[i][p], weight[p][q])
            product[i][q] = acc
    result = []
    for i in range(dim):
        row = []
        for j in range(dim):
            total = KappaValue(coeff=Fraction(0), nu=nu)
            for q in range(dim):
                total = total + inner_product(product[i][q], right[j][q])
            row.append(total)
        result.append(row)
    logger.debug("Computed Gram integral", n=n, m=m, two_ell=spec.two_ell, nu=str(nu))
    return result


def h0_display(spec: WeightSpec) -> List[Fraction]:
    """
    Diagonal of H_0 in kappa(nu) units, using sqrt(pi) Gamma(nu+1/2)/Gamma(nu+1) = kappa(nu)/nu.
    """
    two_ell, nu = spec.two_ell, spec.nu
    values = []
    for j in range(spec.dim):
        value = (two_ell + nu) * factorial(j) * factorial(two_ell - j) * pochhammer(nu + 1, two_ell)
        value /= factorial(two_ell) * pochhammer(nu + 1, j) * pochhammer(nu + 1, two_ell - j)
        values.append(value / nu)
    return values


def weight_moment(m: int, spec: WeightSpec) -> KappaMatrix:
    """Entry-wise integral of C_m^(nu) W_pol(i, j) against (1-x^2)^(nu-1/2)."""
    nu = spec.nu
    unit = norm_coefficient(m, nu)
    result = []
    for i in range(spec.dim):
        row = []
        for j in range(spec.dim):
            row.append(KappaValue(coeff=weight_entry(i, j, spec).coefficient(m) * unit, nu=nu))
        result.append(row)
    return result


def top_coefficient_integral(m: int, spec: WeightSpec) -> KappaMatrix:
    """
    Integral of the monic P_m against (1-x^2)^(nu+2l-1/2), read off the constant C^(nu+2l) coefficient.
    """
    lam = spec.companion_lambda
    series = geg_entries(monic_p(m, spec), lam)
    return [[KappaValue(coeff=series[i][j].coefficient(0) / lam, nu=lam) for j in range(spec.dim)]
            for i in range(spec.dim)]


def kappa_rational_part(matrix: KappaMatrix) -> np.ndarray:
    return matrix_from_function(len(matrix), lambda i, j: matrix[i][j].coeff)
