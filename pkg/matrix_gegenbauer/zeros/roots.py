# path: matrix_gegenbauer/zeros/roots.py

import math
from fractions import Fraction
from typing import List, Sequence

import mpmath
import numpy as np
import structlog

from matrix_gegenbauer.models import ComplexRoot
from matrix_gegenbauer.polynomials.algebra import MonoPoly

logger = structlog.get_logger()


class ConvergenceFailureError(ArithmeticError):
    """Raised when the simultaneous iteration does not settle within its cap."""


class DegreeTooLargeError(ValueError):
    """Raised for polynomials beyond the supported degree."""


def trailing_zeros(poly: MonoPoly) -> int:
    """Multiplicity of the root x = 0."""
    count = 0
    while count <= poly.degree and poly.coefficient(count) == 0:
        count += 1
    return count


def strip_zero_root(poly: MonoPoly) -> MonoPoly:
    return MonoPoly(poly.coeffs[trailing_zeros(poly):])


def is_even(poly: MonoPoly) -> bool:
    return all(c == 0 for d, c in enumerate(poly.coeffs) if d % 2)


def _cauchy_radius(coeffs: np.ndarray) -> float:
    """1 + max |a_i / a_n| for coefficients listed highest power first."""
    lead = coeffs[0]
    return 1.0 + float(np.max(np.abs(coeffs[1:] / lead))) if coeffs.size > 1 else 1.0


def aberth(coeffs: np.ndarray, rng: np.random.Generator, max_iter: int, tol: float = 1e-14):
    """
    Aberth-Ehrlich iteration in double precision from a rotated circle of Cauchy radius.

    :param coeffs: (np.ndarray) Real coefficients, highest power first.
    :param rng: (np.random.Generator) Source of the starting rotation.
    :param max_iter: (int) Iteration cap.
    :param tol: (float) Relative step size regarded as converged.
    :return: (Tuple[np.ndarray, bool]) Approximate roots and whether the step criterion was met.
    """
    degree = coeffs.size - 1
    deriv = np.polyder(coeffs)
    radius = _cauchy_radius(coeffs)
    angles = 2 * math.pi * np.arange(degree) / degree + rng.uniform(0, 2 * math.pi / degree) + 0.25
    z = radius * np.exp(1j * angles)
    for _ in range(max_iter):
        p = np.polyval(coeffs, z)
        dp = np.polyval(deriv, z)
        diffs = z[:, None] - z[None, :]
        np.fill_diagonal(diffs, np.inf)
        sums = np.sum(1.0 / diffs, axis=1)
        with np.errstate(divide='ignore', invalid='ignore'):
            ratio = p / dp
            delta = ratio / (1.0 - ratio * sums)
        delta = np.where(np.isfinite(delta), delta, 0)
        z = z - delta
        if np.all(np.abs(delta) <= tol * np.maximum(1.0, np.abs(z))):
            return z, True
    return z, False


def _mp_coeffs(coeffs: Sequence[Fraction]) -> List[mpmath.mpf]:
    return [mpmath.mpf(c.numerator) / c.denominator for c in reversed(coeffs)]


def polish(coeffs: Sequence[Fraction], start: np.ndarray, dps: int, max_iter: int = 50) -> List[mpmath.mpc]:
    """
    Aberth steps at dps digits on the exact coefficients (lowest power first).
    """
    with mpmath.workdps(dps):
        mp_coeffs = _mp_coeffs(coeffs)
        z = [mpmath.mpc(complex(s)) for s in start]
        eps = mpmath.mpf(10) ** (-(dps - 10))
        for _ in range(max_iter):
            done = True
            updated = []
            for i, zi in enumerate(z):
                p, dp = mpmath.polyval(mp_coeffs, zi, derivative=True)
                if p == 0:
                    updated.append(zi)
                    continue
                ratio = p / dp
                sums = mpmath.fsum(1 / (zi - zj) for j, zj in enumerate(z) if j != i)
                delta = ratio / (1 - ratio * sums)
                if abs(delta) > eps * max(1, abs(zi)):
                    done = False
                updated.append(zi - delta)
            z = updated
            if done:
                break
        return z


def relative_residual(coeffs: Sequence[Fraction], z: mpmath.mpc, dps: int) -> float:
    """|p(z)| / sum |c_i| |z|^i."""
    with mpmath.workdps(dps):
        p = mpmath.polyval(_mp_coeffs(coeffs), z)
        scale = mpmath.fsum(abs(mpmath.mpf(c.numerator) / c.denominator) * abs(z) ** d for d, c in enumerate(coeffs))
        return float(abs(p) / scale) if scale else float(abs(p))


def _pair_conjugates(roots: List[mpmath.mpc], dps: int) -> List[complex]:
    """Snap near-real roots onto the axis and mirror the upper half-plane."""
    threshold = mpmath.mpf(10) ** (-(dps // 3))
    real, upper, lower = [], [], []
    for z in roots:
        if abs(z.imag) <= threshold * max(1, abs(z)):
            real.append(complex(float(z.real), 0.0))
        elif z.imag > 0:
            upper.append(z)
        else:
            lower.append(z)
    if len(upper) != len(lower):
        raise ConvergenceFailureError(f"Unpaired non-real roots: {len(upper)} above, {len(lower)} below the axis")
    paired = []
    for z in upper:
        paired.append(complex(float(z.real), float(z.imag)))
        paired.append(complex(float(z.real), -float(z.imag)))
    return real + paired


def find_roots(poly: MonoPoly, seed: int = 0, max_iter: int = 500, polish_dps: int = 60,
               residual_tol: float = 1e-9, max_degree: int = 200) -> List[ComplexRoot]:
    """
    All complex roots of a real polynomial with exact coefficients.

    The root x = 0 is split off exactly and even polynomials are solved in x^2 first.
    Double-precision Aberth-Ehrlich supplies starting points for a high-precision polish.

    :param poly: (MonoPoly) Polynomial of degree >= 1.
    :param seed: (int) Seed for the starting rotation.
    :param max_iter: (int) Aberth iteration cap.
    :param polish_dps: (int) Decimal digits used while polishing.
    :param residual_tol: (float) Bound on the relative residual of every root.
    :param max_degree: (int) Largest accepted degree.
    :return: (List[ComplexRoot]) deg(poly) roots sorted by real then imaginary part.
    :raises DegreeTooLargeError: If the degree exceeds max_degree.
    :raises ConvergenceFailureError: If a root misses the residual bound.
    """
    if poly.degree < 1:
        raise ValueError(f"Polynomial must have degree >= 1, got {poly.degree}")
    if poly.degree > max_degree:
        raise DegreeTooLargeError(f"Degree {poly.degree} exceeds the supported maximum {max_degree}")
    zero_count = trailing_zeros(poly)
    core = strip_zero_root(poly)
    roots = [ComplexRoot(re=0.0, im=0.0, residual=0.0) for _ in range(zero_count)]
    if core.degree == 0:
        return roots
    rng = np.random.default_rng(seed)
    if is_even(core) and core.degree >= 2:
        reduced = core.coeffs[::2]
        start, converged = aberth(_float_coeffs(reduced), rng, max_iter)
        square_roots = np.sqrt(start.astype(complex))
        start = np.concatenate([square_roots, -square_roots])
    else:
        start, converged = aberth(_float_coeffs(core.coeffs), rng, max_iter)
    if not converged:
        logger.warning("Aberth iteration hit its cap, polishing anyway", degree=core.degree, max_iter=max_iter)
    polished = polish(core.coeffs, start, polish_dps)
    for z in _pair_conjugates(polished, polish_dps):
        residual = relative_residual(core.coeffs, mpmath.mpc(z), polish_dps)
        if not residual < residual_tol:
            raise ConvergenceFailureError(f"Root {z} of a degree-{core.degree} polynomial has residual {residual:.3e}")
        roots.append(ComplexRoot(re=z.real, im=z.imag, residual=residual))
    return sorted(roots, key=lambda r: (r.re, r.im))


def _float_coeffs(coeffs: Sequence[Fraction]) -> np.ndarray:
    """Round once to doubles, highest power first, scaled to unit maximum."""
    scale = max(abs(c) for c in coeffs)
    return np.array([float(c / scale) for c in reversed(coeffs)])
