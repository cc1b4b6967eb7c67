# path: matrix_gegenbauer/matrix/operators.py

from fractions import Fraction
from functools import lru_cache
from typing import List, Literal, NamedTuple, Optional, Tuple

import numpy as np
import structlog

from matrix_gegenbauer.matrix.connection import (_matrix_result, _polynomial_result, certify_over_nu, f_matrix,
                                                 gamma_coeff)
from matrix_gegenbauer.matrix.mvop import hat_p, monic_p, recurrence_coeffs, symmetrizer
from matrix_gegenbauer.models import IdentityCheck, WeightSpec
from matrix_gegenbauer.polynomials.algebra import (MatPoly, commutator, diagonal_matrix, identity_matrix,
                                                   inverse_diagonal, matrix_from_function, zero_matrix)
from matrix_gegenbauer.polynomials.kernel import format_rational

logger = structlog.get_logger()


class OperatorSpec(NamedTuple):
    """Matrices of one of the two differential operators."""
    kind: Literal['DOD', 'DOE']
    matrices: dict
    spec: WeightSpec


@lru_cache(maxsize=256)
def dod_spec(spec: WeightSpec) -> OperatorSpec:
    """
    Second-order operator d^2/dx^2 (1-x^2) + d/dx (C - x(2l+2nu+1)) - V.
    """
    two_ell = spec.two_ell

    def c_entry(i: int, j: int) -> int:
        if j == i + 1:
            return two_ell - i
        if j == i - 1:
            return i
        return 0

    c = matrix_from_function(spec.dim, c_entry)
    v = diagonal_matrix([-i * (two_ell - i) for i in range(spec.dim)])
    return OperatorSpec('DOD', {'C': c, 'V': v}, spec)


@lru_cache(maxsize=256)
def doe_spec(spec: WeightSpec) -> OperatorSpec:
    """
    First-order operator d/dx (x B1 + B0) + A0; needs 2l >= 1.
    """
    two_ell = spec.two_ell
    if two_ell == 0:
        raise ValueError("The first-order operator is only defined for 2l >= 1")
    ell = Fraction(two_ell, 2)

    def b0_entry(i: int, j: int) -> Fraction:
        if j == i + 1:
            return Fraction(two_ell - i, two_ell)
        if j == i - 1:
            return Fraction(-i, two_ell)
        return Fraction(0)

    b0 = matrix_from_function(spec.dim, b0_entry)
    b1 = diagonal_matrix([-(ell - i) / ell for i in range(spec.dim)])
    a0 = diagonal_matrix([((ell + 1) * (i - two_ell) - (spec.nu - 1) * (ell - i)) / ell for i in range(spec.dim)])
    return OperatorSpec('DOE', {'B0': b0, 'B1': b1, 'A0': a0}, spec)


def apply_dod(poly: MatPoly, spec: WeightSpec) -> MatPoly:
    """Right action p'' (1-x^2) + p' (C - x(2l+2nu+1)) - p V."""
    ops = dod_spec(spec).matrices
    first, second = poly.derivative(), poly.derivative().derivative()
    drift = spec.two_ell + 2 * spec.nu + 1
    return (second - second.mul_x(2) + first.rmul(ops['C']) - first.mul_x().scale(drift)
            - poly.rmul(ops['V']))


def apply_doe(poly: MatPoly, spec: WeightSpec) -> MatPoly:
    """Right action p' (x B1 + B0) + p A0."""
    ops = doe_spec(spec).matrices
    first = poly.derivative()
    return first.rmul(ops['B1']).mul_x() + first.rmul(ops['B0']) + poly.rmul(ops['A0'])


def dod_eigenvalue(n: int, spec: WeightSpec) -> np.ndarray:
    v = dod_spec(spec).matrices['V']
    return identity_matrix(spec.dim) * Fraction(-n * (spec.two_ell + 2 * spec.nu + n)) - v


def doe_eigenvalue(n: int, spec: WeightSpec) -> np.ndarray:
    ops = doe_spec(spec).matrices
    return ops['A0'] + ops['B1'] * n


def eigen_check(n: int, spec: WeightSpec, monic: bool = False) -> IdentityCheck:
    """Both eigen-relations for hatP_n (or the monic P_n)."""
    poly = monic_p(n, spec) if monic else hat_p(n, spec)
    label = 'P' if monic else 'hatP'
    checks = [_polynomial_result(f"dod-eigen({label}_{n})", apply_dod(poly, spec),
                                 poly.lmul(dod_eigenvalue(n, spec)), spec)]
    if spec.two_ell > 0:
        checks.append(_polynomial_result(f"doe-eigen({label}_{n})", apply_doe(poly, spec),
                                         poly.lmul(doe_eigenvalue(n, spec)), spec))
    return IdentityCheck.combine(f"eigen({label}_{n}) [2l={spec.two_ell}, nu={format_rational(spec.nu)}]", checks)


def _poly_commutator(poly: MatPoly, matrix: np.ndarray) -> MatPoly:
    return poly.rmul(matrix) - poly.lmul(matrix)


def hat_recurrence(n: int, spec: WeightSpec):
    """A-hat, B-hat, C-hat of the symmetrized recurrence."""
    d_n = symmetrizer(n, spec)
    b, c = recurrence_coeffs(n, spec)
    a_hat = d_n @ inverse_diagonal(symmetrizer(n + 1, spec))
    b_hat = d_n @ b @ inverse_diagonal(d_n)
    c_hat = d_n @ c @ inverse_diagonal(symmetrizer(n - 1, spec)) if n > 0 else zero_matrix(spec.dim)
    return a_hat, b_hat, c_hat


def prop_3tr_check(n: int, spec: WeightSpec, b_hat: Optional[np.ndarray] = None) -> IdentityCheck:
    """
    [hatP_{n+1}, A] + hatP_n B^t - B hatP_n + [hatP_{n-1}, C] = 0 and its F-coefficient form.

    :param n: (int) Degree, nonnegative.
    :param spec: (WeightSpec) Weight parameters.
    :param b_hat: (Optional[np.ndarray]) Replacement for the symmetrized B_n.
    :return: (IdentityCheck) Result of both identities.
    """
    a_hat, default_b_hat, c_hat = hat_recurrence(n, spec)
    b_hat = default_b_hat if b_hat is None else b_hat
    current = hat_p(n, spec)
    polynomial = (_poly_commutator(hat_p(n + 1, spec), a_hat) + current.rmul(b_hat.T) - current.lmul(b_hat)
                  + _poly_commutator(hat_p(n - 1, spec), c_hat))
    checks = [_polynomial_result(f"3tr-polynomial(n={n})", polynomial, MatPoly.zero(spec.dim), spec)]
    zero = zero_matrix(spec.dim)
    for k in range(-1, n + 1):
        f_prev = f_matrix(k - 1, n - 1, spec) if n > 0 else zero
        coefficient = (commutator(f_matrix(k + 1, n + 1, spec), a_hat) + f_matrix(k, n, spec) @ b_hat.T
                       - b_hat @ f_matrix(k, n, spec) + commutator(f_prev, c_hat))
        checks.append(_matrix_result(f"3tr-coefficients(n={n}, k={k})", coefficient, zero, spec))
    return IdentityCheck.combine(f"three-term-relation(n={n}) [2l={spec.two_ell}, nu={format_rational(spec.nu)}]",
                                 checks)


def prop_dod_check(n: int, spec: WeightSpec) -> IdentityCheck:
    """
    hatP' C - C^t hatP' = -2[V, hatP_n] and its F-coefficient form for 0 <= k <= n-1.
    """
    ops = dod_spec(spec).matrices
    c, v = ops['C'], ops['V']
    poly = hat_p(n, spec)
    first = poly.derivative()
    left = first.rmul(c) - first.lmul(c.T)
    right = (poly.lmul(v) - poly.rmul(v)).scale(-2)
    checks = [_polynomial_result(f"dod-polynomial(n={n})", left, right, spec)]
    degree_ok = left.degree <= n - 1 and right.degree <= n - 1
    checks.append(IdentityCheck(name=f"dod-degree(n={n})", passed=degree_ok, cells=1,
                                counterexample=None if degree_ok else f"degrees {left.degree}, {right.degree}"))
    lam = spec.companion_lambda
    for k in range(n):
        f_k = f_matrix(k, n, spec)
        lhs = f_k @ c - c.T @ f_k
        rhs = (commutator(f_matrix(k + 1, n, spec), v) / (lam + n - k - 1)
               - commutator(f_matrix(k - 1, n, spec), v) / (lam + n - k + 1))
        checks.append(_matrix_result(f"dod-coefficients(n={n}, k={k})", lhs, rhs, spec))
    return IdentityCheck.combine(f"dod-relation(n={n}) [2l={spec.two_ell}, nu={format_rational(spec.nu)}]",
                                 checks)


def prop_doe_check(n: int, spec: WeightSpec) -> IdentityCheck:
    """
    x[hatP', B1] + hatP' B0 - B0^t hatP' = [2A0 + nB1, hatP_n] and its F-coefficient form for 0 <= k <= n.
    """
    name = f"doe-relation(n={n}) [2l={spec.two_ell}, nu={format_rational(spec.nu)}]"
    if spec.two_ell == 0:
        return IdentityCheck(name=name, passed=True, cells=0, counterexample=None)
    ops = doe_spec(spec).matrices
    b0, b1, a0 = ops['B0'], ops['B1'], ops['A0']
    poly = hat_p(n, spec)
    first = poly.derivative()
    left = _poly_commutator(first, b1).mul_x() + first.rmul(b0) - first.lmul(b0.T)
    right = poly.lmul(2 * a0 + b1 * n) - poly.rmul(2 * a0 + b1 * n)
    checks = [_polynomial_result(f"doe-polynomial(n={n})", left, right, spec)]
    lam = spec.companion_lambda
    nu, two_ell = spec.nu, spec.two_ell
    for k in range(n + 1):
        lhs = (commutator(f_matrix(k - 2, n, spec) / (lam + n - k + 2), b1 * (2 - k + 2 * nu + 2 * two_ell) - 2 * a0)
               + commutator(f_matrix(k, n, spec) / (lam + n - k), b1 * (2 * n - k) + 2 * a0))
        f_prev = f_matrix(k - 1, n, spec)
        rhs = (b0.T @ f_prev - f_prev @ b0) * 2
        checks.append(_matrix_result(f"doe-coefficients(n={n}, k={k})", lhs, rhs, spec))
    return IdentityCheck.combine(name, checks)


class SixTermValues(NamedTuple):
    left: List[Fraction]
    right: List[Fraction]


def six_term_terms(nu: Fraction, n: int, i: int, j: int, k: int, two_ell: int) -> SixTermValues:
    """
    The six terms of the gamma relation behind the connection expansion, each scaled by Gamma(nu+2l).

    A coefficient is only evaluated when its gamma factor is nonzero.
    """
    nu = Fraction(nu)
    mu = nu + n
    big = nu + two_ell
    unit = big

    def term(coefficient, shift_mu: int, row: int, index: int) -> Fraction:
        value = gamma_coeff(mu + shift_mu, row, j, index, two_ell).relative_to(unit)
        if value == 0:
            return value
        return coefficient() * value

    common = (mu + i) * (big + n - i)
    left = [
        term(lambda: Fraction(n - k) / (big + n - k - 1), 0, i, k + 1),
        term(lambda: (2 * big + n - k) / (big + n - k + 1), 0, i, k - 1),
    ]
    right = [
        term(lambda: (n + 1) * mu * (big + n) / common, 1, i, k + 1),
        term(lambda: (nu + i - 1) * (two_ell - i + 1) / common, 0, i - 1, k),
        term(lambda: (i + 1) * (big - i - 1) / common, 0, i + 1, k),
        term(lambda: (big + n) * (2 * nu + two_ell + n - 1) / (common * (big + n - 1)), -1, i, k - 1),
    ]
    return SixTermValues(left, right)


def six_term_gamma_check(nu: Fraction, n: int, i: int, j: int, k: int, two_ell: int) -> bool:
    values = six_term_terms(nu, n, i, j, k, two_ell)
    return sum(values.left) == sum(values.right)


def six_term_degree_bound(two_ell: int, n: int) -> int:
    """Bound on the nu-degree of the six-term relation after clearing denominators."""
    per_term = 12 + 3 * two_ell + n
    return 6 * per_term


def certify_six_term(two_ell: int, n: int, i: int, j: int, k: int) -> IdentityCheck:
    return certify_over_nu(f"six-term(2l={two_ell}, n={n}, i={i}, j={j}, k={k})",
                           lambda nu: six_term_gamma_check(nu, n, i, j, k, two_ell),
                           six_term_degree_bound(two_ell, n))


def six_term_cells(two_ell: int) -> List[Tuple[int, int, int]]:
    """Index triples (i, j, k) with i+j+k odd, the only ones where the six-term relation is not 0 = 0."""
    return [(i, j, k) for i in range(two_ell + 1) for j in range(two_ell + 1) for k in range(two_ell + 1)
            if (i + j + k) % 2]


def certify_six_term_size(two_ell: int) -> List[IdentityCheck]:
    """
    Certify the six-term relation in nu for every nontrivial cell at n = 2l+1 and n = 2l+2.

    :param two_ell: (int) Size parameter.
    :return: (List[IdentityCheck]) One certification per (n, i, j, k).
    """
    results = [certify_six_term(two_ell, n, i, j, k)
               for n in (two_ell + 1, two_ell + 2) for i, j, k in six_term_cells(two_ell)]
    logger.debug("Six-term relation certified", two_ell=two_ell, cells=len(results),
                 failed=sum(1 for r in results if not r.passed))
    return results
