# path: matrix_gegenbauer/zeros/survey.py

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import factorial
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
import structlog
import sympy

from matrix_gegenbauer.matrix.connection import f_matrix
from matrix_gegenbauer.models import ComplexRoot, IdentityCheck, SessionConfig, WeightSpec, ZeroFlags, ZeroReport
from matrix_gegenbauer.polynomials.algebra import MonoPoly
from matrix_gegenbauer.polynomials.gegenbauer import gegenbauer
from matrix_gegenbauer.polynomials.kernel import format_rational, pochhammer
from matrix_gegenbauer.zeros.roots import ConvergenceFailureError, DegreeTooLargeError, find_roots, trailing_zeros

logger = structlog.get_logger()

_HALF = Fraction(1, 2)


class DegenerateInputError(ValueError):
    """Raised when two root sets cannot be compared for interlacing."""


class ImaginaryTrend(NamedTuple):
    points: List[Tuple[int, float]]
    nondecreasing: bool
    supremum: float


def echelon(i: int, j: int, two_ell: int) -> int:
    return 1 + min(i, two_ell - i, j, two_ell - j)


def entry_terms(n: int, spec: WeightSpec, i: int, j: int) -> List[Tuple[int, Fraction]]:
    """Nonzero (degree, coefficient) pairs of entry (i, j) of hatP_n in the C^(nu+2l) basis."""
    terms = []
    for k in range(min(n, spec.two_ell) + 1):
        c = f_matrix(k, n, spec)[i, j]
        if c:
            terms.append((n - k, c))
    return terms


def entry_poly(n: int, spec: WeightSpec, i: int, j: int) -> MonoPoly:
    """
    Entry (i, j) of hatP_n with exact coefficients, assembled from the connection coefficients.

    :param n: (int) Degree.
    :param spec: (WeightSpec) Weight parameters.
    :param i: (int) Row index.
    :param j: (int) Column index.
    :return: (MonoPoly) The entry polynomial.
    """
    if not (0 <= i <= spec.two_ell and 0 <= j <= spec.two_ell):
        raise IndexError(f"Entry ({i}, {j}) outside a {spec.dim}x{spec.dim} matrix")
    lam = spec.companion_lambda
    total = MonoPoly()
    for degree, c in entry_terms(n, spec, i, j):
        total = total + gegenbauer(degree, lam) * c
    return total


def classify(report: ZeroReport, tol: float = 1e-8) -> ZeroReport:
    """
    Realness, interval and purely-imaginary flags of a report's roots.

    :param report: (ZeroReport) Report with roots filled in.
    :param tol: (float) Classification tolerance.
    :return: (ZeroReport) Copy with flags set; interlacing is left as it was.
    """
    real = [r for r in report.roots if abs(r.im) < tol]
    nonreal = [r for r in report.roots if abs(r.im) >= tol]
    boundary = sum(1 for r in real if abs(abs(r.re) - 1) <= tol)
    inside = all(abs(r.re) < 1 - tol for r in real)
    flags = ZeroFlags(
        all_real_in_interval=not nonreal and inside,
        real_count=len(real),
        boundary_count=boundary,
        imag_pair_count=sum(1 for r in nonreal if abs(r.re) < tol and r.im > 0),
        nonreal_purely_imaginary=all(abs(r.re) < tol for r in nonreal),
        interlaces_with_prev=report.flags.interlaces_with_prev,
    )
    return report.model_copy(update={'flags': flags})


def real_roots(roots: Iterable[ComplexRoot], tol: float = 1e-8) -> List[float]:
    return sorted(r.re for r in roots if abs(r.im) < tol)


def interlaces(current: Sequence[float], previous: Sequence[float], tol: float = 1e-8) -> bool:
    """
    Strict alternation of two sorted real root lists whose lengths differ by at most one.

    :raises DegenerateInputError: If a list is empty or the lengths differ by more than one.
    """
    if not current or not previous or abs(len(current) - len(previous)) > 1:
        raise DegenerateInputError(f"Cannot compare {len(current)} roots against {len(previous)}")
    merged = sorted([(x, 0) for x in current] + [(x, 1) for x in previous])
    for (x, label), (y, next_label) in zip(merged, merged[1:]):
        if label == next_label or y - x <= tol:
            return False
    return True


def _settings_seed(seed: int, n: int, i: int, j: int) -> int:
    return int(np.random.SeedSequence([seed, n, i, j]).generate_state(1)[0])


def _roots_of(poly: MonoPoly, config: SessionConfig, n: int, i: int, j: int) -> List[ComplexRoot]:
    return find_roots(poly, seed=_settings_seed(config.seed, n, i, j), max_iter=config.aberth_max_iter,
                      polish_dps=config.polish_dps, residual_tol=config.residual_tol, max_degree=config.max_degree)


def interlace_check(entry: Tuple[int, int], n: int, spec: WeightSpec, config: SessionConfig) -> bool:
    """
    Interlacing of the real roots of entry polynomials at degrees n and n-1.

    :raises DegenerateInputError: If either polynomial is constant or the real root counts are not comparable.
    """
    i, j = entry
    current, previous = entry_poly(n, spec, i, j), entry_poly(n - 1, spec, i, j) if n > 0 else MonoPoly()
    if current.degree < 1 or previous.degree < 1:
        raise DegenerateInputError(f"Entry ({i}, {j}) is constant at n={n} or n={n - 1}")
    return interlaces(real_roots(_roots_of(current, config, n, i, j), config.tol),
                      real_roots(_roots_of(previous, config, n - 1, i, j), config.tol), config.tol)


def zero_report(n: int, spec: WeightSpec, entry: Tuple[int, int], config: SessionConfig) -> ZeroReport:
    """Roots and flags of one entry; convergence problems are recorded on the report."""
    i, j = entry
    poly = entry_poly(n, spec, i, j)
    report = ZeroReport(entry=entry, n=n, nu=spec.nu, two_ell=spec.two_ell, echelon=echelon(i, j, spec.two_ell),
                        degree=poly.degree)
    if poly.degree < 1:
        return classify(report, config.tol)
    try:
        roots = _roots_of(poly, config, n, i, j)
    except ConvergenceFailureError as e:
        logger.warning("Root finding failed", entry=entry, n=n, nu=format_rational(spec.nu), error=str(e))
        return report.model_copy(update={'converged': False, 'error': str(e)})
    report = report.model_copy(update={'roots': roots, 'zero_multiplicity': trailing_zeros(poly)})
    return classify(report, config.tol)


def select_entries(two_ell: int, entries: Optional[Sequence[Tuple[int, int]]] = None,
                   echelon_filter: Optional[int] = None) -> List[Tuple[int, int]]:
    selected = list(entries) if entries else [(i, j) for i in range(two_ell + 1) for j in range(two_ell + 1)]
    if echelon_filter is not None:
        selected = [(i, j) for i, j in selected if echelon(i, j, two_ell) == echelon_filter]
    return sorted(selected)


def survey(config: SessionConfig, nu: Fraction, n_values: Sequence[int],
           entries: Optional[Sequence[Tuple[int, int]]] = None, echelon_filter: Optional[int] = None) -> List[ZeroReport]:
    """
    Zero reports for every selected entry and degree, ordered by (n, i, j).

    Interlacing flags are filled in between consecutive degrees present in the survey.

    :param config: (SessionConfig) Session parameters (size, threads, tolerances, seed).
    :param nu: (Fraction) Gegenbauer parameter of the survey.
    :param n_values: (Sequence[int]) Degrees to survey.
    :param entries: (Optional[Sequence[Tuple[int, int]]]) Entries to survey, all by default.
    :param echelon_filter: (Optional[int]) Keep only entries of this echelon.
    :return: (List[ZeroReport]) The reports.
    :raises DegreeTooLargeError: If a requested degree exceeds the configured maximum.
    """
    spec = config.weight_spec(nu)
    n_values = sorted(set(n_values))
    if n_values and n_values[-1] > config.max_degree:
        raise DegreeTooLargeError(f"Degree {n_values[-1]} exceeds the supported maximum {config.max_degree}")
    tasks = [(n, entry) for n in n_values for entry in select_entries(spec.two_ell, entries, echelon_filter)]
    logger.info("Starting zero survey", two_ell=spec.two_ell, nu=format_rational(nu), cells=len(tasks),
                threads=config.threads)
    with ThreadPoolExecutor(max_workers=config.threads) as executor:
        reports = list(executor.map(lambda task: zero_report(task[0], spec, task[1], config), tasks))
    by_key: Dict[Tuple[int, Tuple[int, int]], ZeroReport] = {(r.n, r.entry): r for r in reports}
    result = []
    for report in reports:
        previous = by_key.get((report.n - 1, report.entry))
        interlacing = None
        if previous is not None and report.converged and previous.converged:
            try:
                interlacing = interlaces(real_roots(report.roots, config.tol), real_roots(previous.roots, config.tol),
                                         config.tol)
            except DegenerateInputError:
                interlacing = None
        result.append(report.model_copy(update={'flags': report.flags.model_copy(
            update={'interlaces_with_prev': interlacing})}))
    logger.info("Finished zero survey", reports=len(result), failed=sum(1 for r in result if not r.converged))
    return result


def same_sign_check(n: int, spec: WeightSpec, i: int, j: int) -> bool:
    """The Gegenbauer coefficients of an entry all share one sign."""
    signs = {c > 0 for _, c in entry_terms(n, spec, i, j)}
    return len(signs) <= 1


def shifted_sum_poly(n: int, k: int, lam: Fraction) -> MonoPoly:
    """C_n^(lam)/(lam+n) + C_{n-k}^(lam)/(lam+n-k)."""
    if not 0 < k <= n:
        raise ValueError(f"Shift must satisfy 0 < k <= n, got k={k}, n={n}")
    return gegenbauer(n, lam) * (1 / (lam + n)) + gegenbauer(n - k, lam) * (1 / (lam + n - k))


def shifted_sum_flags(n: int, k: int, lam: Fraction, config: SessionConfig) -> ZeroFlags:
    poly = shifted_sum_poly(n, k, lam)
    report = ZeroReport(entry=(0, 0), n=n, nu=lam, two_ell=0, echelon=0, degree=poly.degree,
                        roots=find_roots(poly, seed=config.seed, max_iter=config.aberth_max_iter,
                                         polish_dps=config.polish_dps, residual_tol=config.residual_tol,
                                         max_degree=config.max_degree))
    return classify(report, config.tol).flags


def imaginary_trend(reports: Sequence[ZeroReport], tol: float = 1e-8) -> ImaginaryTrend:
    """Largest purely imaginary root per degree, in increasing n, with monotonicity and the observed supremum."""
    points = []
    for report in sorted(reports, key=lambda r: r.n):
        tops = [r.im for r in report.roots if abs(r.re) < tol and r.im >= tol]
        if tops:
            points.append((report.n, max(tops)))
    values = [v for _, v in points]
    nondecreasing = all(b >= a - tol for a, b in zip(values, values[1:]))
    return ImaginaryTrend(points=points, nondecreasing=nondecreasing, supremum=max(values, default=0.0))


def exact_real_root_count(poly: MonoPoly, lo: Fraction = Fraction(-1), hi: Fraction = Fraction(1)) -> int:
    """Number of real roots in [lo, hi] with multiplicity, by Sturm sequences."""
    x = sympy.Symbol('x')
    expr = sum((sympy.Rational(c.numerator, c.denominator) * x ** d for d, c in enumerate(poly.coeffs)),
               sympy.Integer(0))
    return sympy.Poly(expr, x).count_roots(sympy.Rational(lo.numerator, lo.denominator),
                                            sympy.Rational(hi.numerator, hi.denominator))


def jacobi(n: int, alpha: Fraction, beta: Fraction) -> MonoPoly:
    """Jacobi polynomial (alpha+1)_n/n! 2F1(-n, n+alpha+beta+1; alpha+1; (1-x)/2)."""
    argument = MonoPoly([_HALF, -_HALF])
    total = MonoPoly()
    power = MonoPoly.constant(1)
    for k in range(n + 1):
        weight = pochhammer(Fraction(-n), k) * pochhammer(n + alpha + beta + 1, k) / (
            factorial(k) * pochhammer(alpha + 1, k))
        total = total + power * weight
        power = power * argument
    return total * (pochhammer(alpha + 1, n) / factorial(n))


def gegenbauer_via_jacobi(m: int, lam: Fraction, x: Fraction) -> Fraction:
    """C_m^(lam)(x) through the quadratic transformation to Jacobi polynomials in 2x^2-1."""
    y = 2 * x * x - 1
    half = m // 2
    if m % 2 == 0:
        return pochhammer(lam, half) / pochhammer(_HALF, half) * jacobi(half, lam - _HALF, -_HALF).evaluate(y)
    return (pochhammer(lam, half + 1) / pochhammer(_HALF, half + 1) * x
            * jacobi(half, lam - _HALF, _HALF).evaluate(y))


def jacobi_translation_check(n: int, lam: Fraction, samples: Sequence[Fraction]) -> IdentityCheck:
    """C_{2n} and C_{2n+1} against their Jacobi forms at rational sample points."""
    name = f"jacobi-translation(n={n}, lambda={format_rational(lam)})"
    for m in (2 * n, 2 * n + 1):
        for x in samples:
            if gegenbauer(m, lam).evaluate(x) != gegenbauer_via_jacobi(m, lam, x):
                return IdentityCheck(name=name, passed=False, cells=2 * len(samples),
                                     counterexample=f"degree {m} at x={format_rational(x)}")
    return IdentityCheck(name=name, passed=True, cells=2 * len(samples))


def entry_jacobi_check(n: int, spec: WeightSpec, i: int, j: int, samples: Sequence[Fraction]) -> IdentityCheck:
    """An entry polynomial evaluated directly and through the Jacobi form of each Gegenbauer term."""
    lam = spec.companion_lambda
    poly = entry_poly(n, spec, i, j)
    name = f"entry-jacobi(n={n}, entry=({i}, {j})) [2l={spec.two_ell}, nu={format_rational(spec.nu)}]"
    for x in samples:
        translated = sum((c * gegenbauer_via_jacobi(m, lam, x) for m, c in entry_terms(n, spec, i, j)), Fraction(0))
        if poly.evaluate(x) != translated:
            return IdentityCheck(name=name, passed=False, cells=len(samples), counterexample=f"x={format_rational(x)}")
    return IdentityCheck(name=name, passed=True, cells=len(samples))
