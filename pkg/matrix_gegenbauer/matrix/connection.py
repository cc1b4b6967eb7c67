# path: matrix_gegenbauer/matrix/connection.py

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Iterable, List, NamedTuple

import numpy as np
import structlog

from matrix_gegenbauer.matrix.mvop import gram_integral, hat_p, kappa_rational_part, symmetrizer
from matrix_gegenbauer.models import IdentityCheck, WeightSpec
from matrix_gegenbauer.polynomials.algebra import (MatPoly, commutator, flip_matrix, identity_matrix,
                                                   inverse_diagonal, is_diagonal, is_zero_matrix,
                                                   matrices_equal, matrix_from_function, mono_times_matrix,
                                                   zero_matrix)
from matrix_gegenbauer.polynomials.gegenbauer import connect_integer, gegenbauer
from matrix_gegenbauer.polynomials.kernel import (PoleError, as_rational, binomial, format_rational,
                                                  gamma_ratio_shift, half_index, pochhammer)

logger = structlog.get_logger()


class GammaTerm(NamedTuple):
    """The value coeff * Gamma(arg) ** power, power in {-1, +1}."""
    coeff: Fraction
    arg: Fraction
    power: int

    def relative_to(self, unit: Fraction) -> Fraction:
        """
        Rational value of the term divided (power +1) or multiplied (power -1) by Gamma(unit).

        :param unit: (Fraction) Normalizing Gamma argument, an integer away from arg.
        :return: (Fraction) Exact value; 1/Gamma at a pole counts as 0.
        """
        if self.coeff == 0:
            return Fraction(0)
        shift = self.arg - unit
        if shift.denominator != 1:
            raise ValueError(f"Gamma unit {format_rational(unit)} is not an integer away from {format_rational(self.arg)}")
        shift = int(shift)
        if self.power < 0:
            return self.coeff * gamma_ratio_shift(unit, 0, shift, reciprocal_pole=True)
        return self.coeff * gamma_ratio_shift(unit, shift, 0)


_ZERO = GammaTerm(Fraction(0), Fraction(1), -1)


def _ratio_factors(offset: int, shift: int):
    """Gamma(mu+offset+shift)/Gamma(mu+offset) as (numerator, denominator) offsets of linear factors."""
    if shift >= 0:
        return [offset + s for s in range(shift)], []
    return [], [offset + shift + s for s in range(-shift)]


def _evaluate_factors(mu: Fraction, scalar: Fraction, numerator: Iterable[int], denominator: Iterable[int]) -> Fraction:
    """Product of (mu+a) over numerator / (mu+b) over denominator, cancelling equal factors first."""
    top, bottom = Counter(numerator), Counter(denominator)
    common = top & bottom
    top, bottom = top - common, bottom - common
    value = Fraction(scalar)
    for offset, count in top.items():
        value *= (mu + offset) ** count
        if value == 0:
            return value
    for offset, count in bottom.items():
        factor = (mu + offset) ** count
        if factor == 0:
            raise PoleError(f"Pole of a connection coefficient at mu={format_rational(mu)}")
        value /= factor
    return value


def _in_range(two_ell: int, *indices: int) -> bool:
    return all(0 <= v <= two_ell for v in indices)


def gamma_coeff(mu: Fraction, i: int, j: int, k: int, two_ell: int) -> GammaTerm:
    """
    gamma(mu; i, j, k) of the expansion of hatP_n in C^(nu+2l), as rational / Gamma(arg).

    Zero when i+j and k differ in parity, when a binomial factor vanishes, or when an
    index leaves 0..2l.

    :param mu: (Fraction) First argument, nu + n in the expansion.
    :param i: (int) Row index.
    :param j: (int) Column index.
    :param k: (int) Term index.
    :param two_ell: (int) Size parameter.
    :return: (GammaTerm) The coefficient.
    """
    mu = as_rational(mu)
    if not _in_range(two_ell, i, j, k):
        return _ZERO
    a, b = half_index(k + i - j), half_index(i + j - k)
    weight = binomial(two_ell, k) * binomial(k, a) * binomial(two_ell - k, b)
    if weight == 0:
        return _ZERO
    c = a + j
    numerator = [two_ell, two_ell - k] + list(range(b))
    denominator = list(range(two_ell - c, two_ell - a + 1))
    coeff = _evaluate_factors(mu, Fraction((-1) ** k * weight), numerator, denominator)
    return GammaTerm(coeff, mu + two_ell + 1 - k + a, -1)


def phi_coeff(mu: Fraction, i: int, j: int, r: int, two_ell: int) -> GammaTerm:
    """
    phi(mu; i, j, r) of the expansion of C_m^(nu) 1 in hatP, as rational * Gamma(arg).
    """
    mu = as_rational(mu)
    if not _in_range(two_ell, i, j, r):
        return GammaTerm(Fraction(0), mu, 1)
    a, b = half_index(r + i - j), half_index(i + j - r)
    weight = binomial(two_ell, r) * binomial(r, a) * binomial(two_ell - r, b)
    if weight == 0:
        return GammaTerm(Fraction(0), mu, 1)
    c = a + j
    scalar = Fraction(weight, binomial(two_ell, i) * binomial(two_ell, j))
    numerator = [j - r, two_ell - r - j]
    denominator: List[int] = []
    for offset, shift in ((two_ell + 1 - c, c - r - 1), (1 + b, a - r - 1 - b)):
        top, bottom = _ratio_factors(offset, shift)
        numerator += top
        denominator += bottom
    coeff = _evaluate_factors(mu, scalar, numerator, denominator)
    return GammaTerm(coeff, mu - a, 1)


@lru_cache(maxsize=65536)
def f_matrix(k: int, n: int, spec: WeightSpec) -> np.ndarray:
    """
    F_{k,n} with hatP_n = sum_k F_{k,n} C^(nu+2l)_{n-k}; zero outside 0 <= k <= min(n, 2l).
    """
    two_ell = spec.two_ell
    if not 0 <= k <= min(n, two_ell):
        return zero_matrix(spec.dim)
    mu = spec.nu + n
    unit = spec.nu + two_ell
    prefactor = Fraction(factorial(n), 2 ** n)
    return matrix_from_function(
        spec.dim, lambda i, j: prefactor * gamma_coeff(mu, i, j, k, two_ell).relative_to(unit))


@lru_cache(maxsize=65536)
def g_matrix(r: int, m: int, spec: WeightSpec) -> np.ndarray:
    """
    G_{r,m} with C_m^(nu) 1 = sum_r G_{r,m} hatP_{m-r}; zero outside 0 <= r <= min(m, 2l).
    """
    two_ell = spec.two_ell
    if not 0 <= r <= min(m, two_ell):
        return zero_matrix(spec.dim)
    mu = spec.nu + m
    prefactor = Fraction(2 ** (m - r), factorial(m - r))
    return matrix_from_function(
        spec.dim, lambda i, j: prefactor * phi_coeff(mu, i, j, r, two_ell).relative_to(spec.nu))


def f_terms(n: int, spec: WeightSpec) -> List[np.ndarray]:
    return [f_matrix(k, n, spec) for k in range(min(n, spec.two_ell) + 1)]


def synthesize_hat_p(n: int, spec: WeightSpec) -> MatPoly:
    """hatP_n rebuilt from the connection coefficients F_{k,n} and C^(nu+2l)_{n-k}."""
    lam = spec.companion_lambda
    total = MatPoly.zero(spec.dim)
    for k, matrix in enumerate(f_terms(n, spec)):
        total = total + mono_times_matrix(gegenbauer(n - k, lam), matrix)
    return total


def expand_scalar(m: int, spec: WeightSpec) -> List[np.ndarray]:
    return [g_matrix(r, m, spec) for r in range(min(m, spec.two_ell) + 1)]


def reconstruct_scalar(m: int, spec: WeightSpec) -> MatPoly:
    """sum_r G_{r,m} hatP_{m-r}, which equals C_m^(nu) times the identity."""
    total = MatPoly.zero(spec.dim)
    for r, matrix in enumerate(expand_scalar(m, spec)):
        total = total + hat_p(m - r, spec).lmul(matrix)
    return total


def m_coeff(t: int, n: int, spec: WeightSpec) -> np.ndarray:
    """M_t = sum_k F_{k,n} G^(nu+2l)_{t-k,n-k} of hatP^(nu)_n = sum_t M_t hatP^(nu+2l)_{n-t}."""
    two_ell = spec.two_ell
    shifted = spec.shifted(two_ell)
    total = zero_matrix(spec.dim)
    for k in range(max(0, t - two_ell), min(n, two_ell) + 1):
        total = total + f_matrix(k, n, spec) @ g_matrix(t - k, n - k, shifted)
    return total


def m_expansion_check(n: int, spec: WeightSpec) -> IdentityCheck:
    shifted = spec.shifted(spec.two_ell)
    total = MatPoly.zero(spec.dim)
    for t in range(min(n, 2 * spec.two_ell) + 1):
        total = total + hat_p(n - t, shifted).lmul(m_coeff(t, n, spec))
    return _polynomial_result(f"m-expansion(n={n})", total, hat_p(n, spec), spec)


def _polynomial_result(name: str, actual: MatPoly, expected: MatPoly, spec: WeightSpec) -> IdentityCheck:
    full_name = f"{name} [2l={spec.two_ell}, nu={format_rational(spec.nu)}]"
    if actual == expected:
        return IdentityCheck(name=full_name, passed=True, cells=spec.dim ** 2)
    for i in range(spec.dim):
        for j in range(spec.dim):
            if actual.entry(i, j) != expected.entry(i, j):
                return IdentityCheck(name=full_name, passed=False, cells=spec.dim ** 2,
                                     counterexample=f"entry ({i}, {j})")
    return IdentityCheck(name=full_name, passed=False, cells=spec.dim ** 2, counterexample="degree")


def _matrix_result(name: str, actual: np.ndarray, expected: np.ndarray, spec: WeightSpec) -> IdentityCheck:
    full_name = f"{name} [2l={spec.two_ell}, nu={format_rational(spec.nu)}]"
    for i in range(spec.dim):
        for j in range(spec.dim):
            if actual[i, j] != expected[i, j]:
                return IdentityCheck(name=full_name, passed=False, cells=spec.dim ** 2,
                                     counterexample=f"entry ({i}, {j}): {format_rational(actual[i, j])} != "
                                                    f"{format_rational(expected[i, j])}")
    return IdentityCheck(name=full_name, passed=True, cells=spec.dim ** 2)


def synthesis_check(n: int, spec: WeightSpec) -> IdentityCheck:
    return _polynomial_result(f"f-expansion(n={n})", synthesize_hat_p(n, spec), hat_p(n, spec), spec)


def inversion_check(m: int, spec: WeightSpec) -> IdentityCheck:
    expected = mono_times_matrix(gegenbauer(m, spec.nu), identity_matrix(spec.dim))
    return _polynomial_result(f"g-expansion(m={m})", reconstruct_scalar(m, spec), expected, spec)


def double_sum_check(s: int, m: int, spec: WeightSpec) -> IdentityCheck:
    """
    sum_r G_{r,m} F_{2s-r,m-r} against the scalar connection coefficient times the identity.

    :param s: (int) Index, 0 <= s <= m // 2.
    :param m: (int) Degree.
    :param spec: (WeightSpec) Weight parameters.
    :return: (IdentityCheck) Result of the comparison.
    """
    two_ell, nu = spec.two_ell, spec.nu
    total = zero_matrix(spec.dim)
    for r in range(max(0, 2 * s - two_ell), min(m, two_ell) + 1):
        total = total + g_matrix(r, m, spec) @ f_matrix(2 * s - r, m - r, spec)
    lam = nu + two_ell
    expected = (lam + m - 2 * s) / lam * pochhammer(nu, m - s) / pochhammer(lam + 1, m - s) \
        * pochhammer(Fraction(-two_ell), s) / factorial(s)
    return _matrix_result(f"double-sum(s={s}, m={m})", total, identity_matrix(spec.dim) * expected, spec)


def scalar_consistency_check(m: int, spec: WeightSpec) -> IdentityCheck:
    """sum_{r+k=t} G_{r,m} F_{k,m-r} is c_{t/2} of connect_integer(m, nu, 2l) for even t, zero for odd t."""
    two_ell = spec.two_ell
    coeffs = connect_integer(m, spec.nu, two_ell)
    checks = []
    for t in range(min(m, 2 * two_ell) + 1):
        total = zero_matrix(spec.dim)
        for r in range(max(0, t - two_ell), min(t, two_ell) + 1):
            total = total + g_matrix(r, m, spec) @ f_matrix(t - r, m - r, spec)
        scalar = coeffs[t // 2] if t % 2 == 0 and t // 2 < len(coeffs) else Fraction(0)
        checks.append(_matrix_result(f"scalar-consistency(m={m}, t={t})", total,
                                     identity_matrix(spec.dim) * scalar, spec))
    return IdentityCheck.combine(f"scalar-consistency(m={m}) [2l={two_ell}, nu={format_rational(spec.nu)}]", checks)


def shift_lemma_check(spec: WeightSpec, n_max: int) -> IdentityCheck:
    """
    F^(nu)_{k,n} = n/(2(nu+2l)) F^(nu+1)_{k,n-1} and G^(nu)_{r,m} = 2nu/(m-r) G^(nu+1)_{r,m-1}.
    """
    two_ell, nu = spec.two_ell, spec.nu
    raised = spec.shifted(1)
    checks = []
    for n in range(1, n_max + 1):
        for k in range(n):
            expected = f_matrix(k, n - 1, raised) * (Fraction(n) / (2 * (nu + two_ell)))
            checks.append(_matrix_result(f"f-shift(k={k}, n={n})", f_matrix(k, n, spec), expected, spec))
        for r in range(n):
            expected = g_matrix(r, n - 1, raised) * (2 * nu / (n - r))
            checks.append(_matrix_result(f"g-shift(r={r}, m={n})", g_matrix(r, n, spec), expected, spec))
    return IdentityCheck.combine(f"shift-lemma [2l={two_ell}, nu={format_rational(nu)}]", checks)


def upper_triangular_shift_check(spec: WeightSpec, k_max: int) -> IdentityCheck:
    """
    F_{m,m+k} = (m+1)_k/(2^k (nu+2l)_k) F^(nu+k)_{m,m} and G_{m,m+k} = 2^k (nu)_k/k! G^(nu+k)_{m,m}.
    """
    two_ell, nu = spec.two_ell, spec.nu
    checks = []
    for m in range(two_ell + 1):
        for k in range(k_max + 1):
            target = spec.shifted(k)
            f_scale = pochhammer(Fraction(m + 1), k) / (2 ** k * pochhammer(nu + two_ell, k))
            checks.append(_matrix_result(f"f-diagonal-shift(m={m}, k={k})", f_matrix(m, m + k, spec),
                                         f_matrix(m, m, target) * f_scale, spec))
            g_scale = 2 ** k * pochhammer(nu, k) / factorial(k)
            checks.append(_matrix_result(f"g-diagonal-shift(m={m}, k={k})", g_matrix(m, m + k, spec),
                                         g_matrix(m, m, target) * g_scale, spec))
    return IdentityCheck.combine(f"diagonal-shift [2l={two_ell}, nu={format_rational(nu)}]", checks)


def structure_check(n: int, spec: WeightSpec) -> IdentityCheck:
    """F_{k,n} symmetric, F_{0,n} diagonal, F_{1,n} zero on the diagonal, G_{r,n} commuting with J."""
    flip = flip_matrix(spec.dim)
    name = f"coefficient-structure(n={n}) [2l={spec.two_ell}, nu={format_rational(spec.nu)}]"
    failures = []
    for k, matrix in enumerate(f_terms(n, spec)):
        if not matrices_equal(matrix, matrix.T):
            failures.append(f"F_{k} not symmetric")
        if k == 0 and not is_diagonal(matrix):
            failures.append("F_0 not diagonal")
        if k == 1 and any(matrix[i, i] != 0 for i in range(spec.dim)):
            failures.append("F_1 has diagonal entries")
    for r, matrix in enumerate(expand_scalar(n, spec)):
        if not is_zero_matrix(commutator(matrix, flip)):
            failures.append(f"G_{r} does not commute with J")
    return IdentityCheck(name=name, passed=not failures, cells=spec.dim ** 2,
                         counterexample=failures[0] if failures else None)


def g_weight_symmetry_check(m: int, spec: WeightSpec) -> IdentityCheck:
    """
    G_{r,m} D_0 H_0 symmetric, with D_0 H_0 = gram(0,0) D_0^{-1} in kappa units taken at nu+m-r.

    G_{r,m} is a multiple of G^(nu+m-r)_{r,r}, a weight moment at the shifted parameter.
    """
    checks = []
    for r, matrix in enumerate(expand_scalar(m, spec)):
        shifted = spec.shifted(m - r)
        scaled_h0 = kappa_rational_part(gram_integral(0, 0, shifted)) @ inverse_diagonal(symmetrizer(0, shifted))
        product = matrix @ scaled_h0
        checks.append(_matrix_result(f"g-weight-symmetry(r={r}, m={m})", product, product.T, spec))
    return IdentityCheck.combine(f"g-weight-symmetry(m={m}) [2l={spec.two_ell}, nu={format_rational(spec.nu)}]",
                                 checks)


def term_count_check(n: int, spec: WeightSpec) -> IdentityCheck:
    bound = min(n, spec.two_ell) + 1
    f_count = sum(1 for k in range(n + 1) if not is_zero_matrix(f_matrix(k, n, spec)))
    g_count = sum(1 for r in range(n + 1) if not is_zero_matrix(g_matrix(r, n, spec)))
    passed = f_count <= bound and g_count <= bound
    return IdentityCheck(name=f"term-count(n={n}) [2l={spec.two_ell}, nu={format_rational(spec.nu)}]",
                         passed=passed, cells=2,
                         counterexample=None if passed else f"F terms {f_count}, G terms {g_count}, bound {bound}")


def nu_samples(count: int) -> List[Fraction]:
    """Positive half-integers 1/2, 1, 3/2, ... used for multipoint certification."""
    return [Fraction(s, 2) for s in range(1, count + 1)]


def certify_over_nu(name: str, check: Callable[[Fraction], bool], degree_bound: int) -> IdentityCheck:
    """
    Certify an identity rational in nu by exact evaluation at degree_bound + 1 sample points.
    """
    for nu in nu_samples(degree_bound + 1):
        if not check(nu):
            return IdentityCheck(name=name, passed=False, cells=degree_bound + 1,
                                 counterexample=f"nu={format_rational(nu)}")
    return IdentityCheck(name=name, passed=True, cells=degree_bound + 1)
