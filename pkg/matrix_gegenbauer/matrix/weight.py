# path: matrix_gegenbauer/matrix/weight.py

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Optional

import structlog

from matrix_gegenbauer.models import IdentityCheck, LDUFactors, WeightSpec
from matrix_gegenbauer.polynomials.algebra import GegSeries, MatPoly, MonoPoly
from matrix_gegenbauer.polynomials.gegenbauer import geg_to_mono, gegenbauer
from matrix_gegenbauer.polynomials.kernel import pochhammer

logger = structlog.get_logger()


class AlphaIndexError(IndexError):
    """Raised for a summation index outside max(0, i+j-2l) <= k <= min(i, j)."""


def alpha_range(i: int, j: int, two_ell: int) -> range:
    return range(max(0, i + j - two_ell), min(i, j) + 1)


@lru_cache(maxsize=16384)
def alpha_coeff(k: int, i: int, j: int, spec: WeightSpec) -> Fraction:
    """
    Coefficient of C^(nu)_{i+j-2k} in the (i, j) entry of the polynomial part of the weight.

    :param k: (int) Summation index.
    :param i: (int) Row index.
    :param j: (int) Column index.
    :param spec: (WeightSpec) Weight parameters.
    :return: (Fraction) alpha_k(i, j).
    :raises AlphaIndexError: If k is outside the summation range.
    """
    two_ell, nu = spec.two_ell, spec.nu
    if not (0 <= i <= two_ell and 0 <= j <= two_ell) or k not in alpha_range(i, j, two_ell):
        raise AlphaIndexError(f"alpha index k={k} out of range for entry ({i}, {j}) with 2l={two_ell}")
    degree = i + j - 2 * k
    value = Fraction((-1) ** k * factorial(i) * factorial(j) * factorial(degree), factorial(k))
    value /= pochhammer(2 * nu, degree) * pochhammer(nu, i + j - k)
    value *= pochhammer(nu, i - k) * pochhammer(nu, j - k) / (factorial(i - k) * factorial(j - k))
    value *= (degree + nu) / (i + j - k + nu)
    value *= Fraction(factorial(two_ell - i) * factorial(two_ell - j), factorial(two_ell + k - i - j))
    value *= pochhammer(-two_ell - nu, k) * (two_ell + nu) / factorial(two_ell)
    return value


@lru_cache(maxsize=4096)
def weight_entry(i: int, j: int, spec: WeightSpec) -> GegSeries:
    """Entry (i, j) of W_pol as a series in C^(nu)."""
    coeffs = [Fraction(0)] * (i + j + 1)
    for k in alpha_range(i, j, spec.two_ell):
        coeffs[i + j - 2 * k] = alpha_coeff(k, i, j, spec)
    return GegSeries(spec.nu, coeffs)


@lru_cache(maxsize=256)
def weight_polynomial(spec: WeightSpec) -> MatPoly:
    """W_pol in the monomial basis; W = (1-x^2)^(nu-1/2) W_pol."""
    return MatPoly.from_entries([[geg_to_mono(weight_entry(i, j, spec)) for j in range(spec.dim)]
                                 for i in range(spec.dim)])


def t_coeff(k: int, spec: WeightSpec) -> Fraction:
    two_ell, nu = spec.two_ell, spec.nu
    value = factorial(k) * pochhammer(nu, k) / pochhammer(nu + Fraction(1, 2), k)
    value *= pochhammer(2 * nu + two_ell, k) * (two_ell + nu)
    return value / (pochhammer(Fraction(two_ell - k + 1), k) * pochhammer(2 * nu + k - 1, k))


@lru_cache(maxsize=256)
def ldu_factors(spec: WeightSpec) -> LDUFactors:
    """
    LDU factors of the weight: L_{m,k} = m!/(k!(2nu+2k)_{m-k}) C^(nu+k)_{m-k} and the scalars t_k.
    """
    nu = spec.nu
    entries = [[MonoPoly() for _ in range(spec.dim)] for _ in range(spec.dim)]
    for m in range(spec.dim):
        for k in range(m + 1):
            factor = Fraction(factorial(m), factorial(k)) / pochhammer(2 * nu + 2 * k, m - k)
            entries[m][k] = gegenbauer(m - k, nu + k) * factor
    t = [(t_coeff(k, spec), k) for k in range(spec.dim)]
    return LDUFactors(lower=MatPoly.from_entries(entries), t=t)


def verify_ldu(spec: WeightSpec, factors: Optional[LDUFactors] = None) -> IdentityCheck:
    """
    Check W_pol = L diag(t_k (1-x^2)^k) L^t as an exact polynomial identity.

    :param spec: (WeightSpec) Weight parameters.
    :param factors: (Optional[LDUFactors]) Factors to test, defaults to the closed-form ones.
    :return: (IdentityCheck) Result carrying the first mismatching entry.
    """
    factors = factors or ldu_factors(spec)
    lower = factors.lower
    one_minus_x2 = MonoPoly([1, 0, -1])
    middle = [one_minus_x2 ** k * t_k for t_k, k in factors.t]
    target = weight_polynomial(spec)
    name = f"ldu(2l={spec.two_ell}, nu={spec.nu})"
    for i in range(spec.dim):
        for j in range(i + 1):
            product = MonoPoly()
            for k in range(min(i, j) + 1):
                product = product + lower.entry(i, k) * middle[k] * lower.entry(j, k)
            if product != target.entry(i, j):
                logger.error("LDU identity failed", entry=(i, j), two_ell=spec.two_ell, nu=str(spec.nu))
                return IdentityCheck(name=name, passed=False, cells=i * spec.dim + j + 1,
                                     counterexample=f"entry ({i}, {j})")
    return IdentityCheck(name=name, passed=True, cells=spec.dim * (spec.dim + 1) // 2)
