# path: matrix_gegenbauer/matrix/generating.py

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import List, Optional

import numpy as np
import structlog
import sympy

from matrix_gegenbauer.matrix.connection import f_matrix
from matrix_gegenbauer.models import ClosedForm, Trivariate, WeightSpec
from matrix_gegenbauer.polynomials.algebra import MatPoly, MonoPoly, mono_times_matrix
from matrix_gegenbauer.polynomials.gegenbauer import gegenbauer
from matrix_gegenbauer.polynomials.kernel import format_rational, pochhammer

logger = structlog.get_logger()

T, X, NU, LAM = sympy.symbols('t x nu lam')

EXTRA_POINTS = 3


class InterpolationMismatchError(ArithmeticError):
    """Raised when a normalized coefficient is not a polynomial of the requested degree in lambda."""


class SeriesMismatchError(ArithmeticError):
    """Raised when a closed form disagrees with the generating series."""


def lambda_degree(two_ell: int) -> int:
    return max(two_ell - 1, 0)


def _to_sympy(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def _to_fraction(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


@lru_cache(maxsize=65536)
def tilde_f(k: int, n: int, spec: WeightSpec) -> np.ndarray:
    """
    Renormalized coefficient Gamma(mu+2l) (mu+1)_D gamma(mu; i, j, k) with mu = nu+n and D = max(2l-1, 0).

    Computed from F_{k,n} by the rational factor (nu+2l)_n (nu+n+1)_D 2^n / n!.

    :param k: (int) Term index.
    :param n: (int) Degree.
    :param spec: (WeightSpec) Weight parameters.
    :return: (np.ndarray) The matrix, zero outside 0 <= k <= min(n, 2l).
    """
    scale = pochhammer(spec.companion_lambda, n) * pochhammer(spec.nu + n + 1, lambda_degree(spec.two_ell))
    scale *= Fraction(2 ** n, factorial(n))
    return f_matrix(k, n, spec) * scale


def poly_in_lambda(k: int, spec: WeightSpec, degree: Optional[int] = None) -> List[List[List[Fraction]]]:
    """
    Interpolate every entry of tilde_f(k, n) as a polynomial in lambda = nu+2l+n-k.

    Uses degree+1 consecutive n starting at n = k and confirms the result at three further n.

    :param k: (int) Term index, 0 <= k <= 2l.
    :param spec: (WeightSpec) Weight parameters.
    :param degree: (Optional[int]) Degree to interpolate with, defaults to max(2l-1, 0).
    :return: (List[List[List[Fraction]]]) Ascending coefficient vectors per entry.
    :raises InterpolationMismatchError: If an extra point is off the interpolant.
    """
    degree = lambda_degree(spec.two_ell) if degree is None else degree
    if degree < 0:
        raise ValueError(f"Degree must be nonnegative, got {degree}")
    base = spec.companion_lambda
    samples = [(base + m, tilde_f(k, k + m, spec)) for m in range(degree + 1 + EXTRA_POINTS)]
    fitted, extras = samples[:degree + 1], samples[degree + 1:]
    result = []
    for i in range(spec.dim):
        row = []
        for j in range(spec.dim):
            points = [(_to_sympy(lam), _to_sympy(matrix[i, j])) for lam, matrix in fitted]
            interpolant = sympy.expand(sympy.interpolate(points, LAM)) if degree else points[0][1]
            for lam, matrix in extras:
                value = _to_fraction(sympy.sympify(interpolant).subs(LAM, _to_sympy(lam)))
                if value != matrix[i, j]:
                    logger.error("Interpolation mismatch", k=k, entry=(i, j), degree=degree,
                                 lam=format_rational(lam), two_ell=spec.two_ell)
                    raise InterpolationMismatchError(
                        f"Entry ({i}, {j}) of the k={k} coefficient is not of degree {degree} in lambda "
                        f"(fails at lambda={format_rational(lam)})")
            poly = sympy.Poly(interpolant, LAM)
            coeffs = [_to_fraction(c) for c in reversed(poly.all_coeffs())]
            row.append(coeffs + [Fraction(0)] * (degree + 1 - len(coeffs)))
        result.append(row)
    return result


def series_coefficients(spec: WeightSpec, order: int) -> List[MatPoly]:
    """Coefficients tildeP_n = sum_k tilde_f(k, n) C^(nu+2l)_{n-k} of t^n, n = 0..order."""
    if order < 0:
        raise ValueError(f"Order must be nonnegative, got {order}")
    lam = spec.companion_lambda
    series = []
    for n in range(order + 1):
        total = MatPoly.zero(spec.dim)
        for k in range(min(n, spec.two_ell) + 1):
            total = total + mono_times_matrix(gegenbauer(n - k, lam), tilde_f(k, n, spec))
        series.append(total)
    return series


def moment_numerators(degree: int) -> List[sympy.Expr]:
    """
    Q_j with sum_m (L+m)^j C^(L)_m t^m = Q_j / (1-2xt+t^2)^(L+j), L = nu + 2l kept symbolic.
    """
    big = sympy.Symbol('L')
    u = 1 - 2 * X * T + T ** 2
    numerators = [sympy.Integer(1)]
    for j in range(degree):
        q = numerators[-1]
        numerators.append(sympy.expand(big * q * u + T * sympy.diff(q, T) * u - (big + j) * q * T * (2 * T - 2 * X)))
    return numerators


def _trivariate(expr: sympy.Expr) -> Trivariate:
    poly = sympy.Poly(expr, T, X, NU)
    degrees = [poly.degree(s) if not poly.is_zero else 0 for s in (T, X, NU)]
    coeffs = [[[Fraction(0)] * (degrees[2] + 1) for _ in range(degrees[1] + 1)] for _ in range(degrees[0] + 1)]
    for (a, b, c), value in poly.terms():
        coeffs[a][b][c] = _to_fraction(value)
    return Trivariate(coeffs=coeffs)


def numerator_expressions(spec: WeightSpec) -> List[List[sympy.Expr]]:
    """Numerator matrix sum_k t^k sum_j c_{k,j} Q_j u^(D-j) as sympy expressions in (t, x, nu)."""
    two_ell = spec.two_ell
    degree = lambda_degree(two_ell)
    u = 1 - 2 * X * T + T ** 2
    q = [expr.subs(sympy.Symbol('L'), NU + two_ell) for expr in moment_numerators(degree)]
    entries = [[sympy.Integer(0)] * spec.dim for _ in range(spec.dim)]
    for k in range(two_ell + 1):
        coeffs = poly_in_lambda(k, spec, degree)
        for i in range(spec.dim):
            for j in range(spec.dim):
                term = sum((_to_sympy(c) * q[p] * u ** (degree - p) for p, c in enumerate(coeffs[i][j]) if c),
                           sympy.Integer(0))
                entries[i][j] += T ** k * term
    return [[sympy.expand(e) for e in row] for row in entries]


def evaluate_numerator(numerator: List[List[Trivariate]], nu: Fraction) -> List[MatPoly]:
    """Substitute nu and split the numerator into x-polynomial matrices by power of t."""
    size = len(numerator)
    depth = max(len(numerator[i][j].coeffs) for i in range(size) for j in range(size))
    layers = []
    for a in range(depth):
        def entry(i: int, j: int, a: int = a) -> MonoPoly:
            coeffs = numerator[i][j].coeffs
            if a >= len(coeffs):
                return MonoPoly()
            return MonoPoly([sum((c * nu ** p for p, c in enumerate(row)), Fraction(0)) for row in coeffs[a]])
        layers.append(MatPoly.from_entries([[entry(i, j) for j in range(size)] for i in range(size)]))
    return layers


def expand_closed_form(form: ClosedForm, nu: Fraction, order: int) -> List[MatPoly]:
    """
    Taylor coefficients in t of numerator / (1-2xt+t^2)^(nu + offset), through (1-2xt+t^2)^(-a) = sum C^(a)_m t^m.
    """
    exponent = nu + form.denominator_offset
    layers = evaluate_numerator(form.numerator, nu)
    size = len(form.numerator)
    result = []
    for n in range(order + 1):
        total = MatPoly.zero(size)
        for d, layer in enumerate(layers[:n + 1]):
            if layer.is_zero():
                continue
            total = total + _times_scalar(layer, gegenbauer(n - d, exponent))
        result.append(total)
    return result


def _times_scalar(layer: MatPoly, poly: MonoPoly) -> MatPoly:
    return MatPoly.from_entries([[layer.entry(i, j) * poly for j in range(layer.size)] for i in range(layer.size)])


def verification_order(two_ell: int) -> int:
    return max(12, 2 * two_ell + 6)


def closed_form(spec: WeightSpec, order: Optional[int] = None) -> ClosedForm:
    """
    Closed form of sum_n tildeP_n t^n as a trivariate numerator over (1-2xt+t^2)^(nu+2l+D).

    :param spec: (WeightSpec) Weight parameters; nu is where the series is compared.
    :param order: (Optional[int]) Highest power of t compared, defaults to max(12, 2*2l+6).
    :return: (ClosedForm) The verified closed form.
    :raises SeriesMismatchError: If any compared coefficient differs.
    """
    two_ell = spec.two_ell
    order = verification_order(two_ell) if order is None else order
    degree = lambda_degree(two_ell)
    expressions = numerator_expressions(spec)
    numerator = [[_trivariate(e) for e in row] for row in expressions]
    form = ClosedForm(two_ell=two_ell, lambda_degree=degree, denominator_offset=two_ell + degree,
                      numerator=numerator, verified_order=order, nu_checked=spec.nu)
    expected = series_coefficients(spec, order)
    for n, actual in enumerate(expand_closed_form(form, spec.nu, order)):
        if actual != expected[n]:
            logger.error("Closed form disagrees with series", power=n, two_ell=two_ell, nu=format_rational(spec.nu))
            raise SeriesMismatchError(f"Closed form differs from the series at t^{n} "
                                      f"(2l={two_ell}, nu={format_rational(spec.nu)})")
    logger.info("Closed form verified", two_ell=two_ell, order=order, nu=format_rational(spec.nu))
    return form


def numerator_is_integral(form: ClosedForm) -> bool:
    return all(entry.is_integral() for row in form.numerator for entry in row)
