# path: matrix_gegenbauer/verification/scalar_suite.py

from fractions import Fraction
from typing import List

from matrix_gegenbauer.models import IdentityCheck, WeightSpec
from matrix_gegenbauer.polynomials.algebra import GegSeries, MonoPoly
from matrix_gegenbauer.polynomials.gegenbauer import (connect_integer_series, diff_geg, geg_to_mono, gegenbauer,
                                                      hypergeometric_oracle, inner_product, linearise, mono_to_geg,
                                                      value_at_one)
from matrix_gegenbauer.polynomials.kernel import format_rational
from matrix_gegenbauer.verification.base import BaseSuite
from matrix_gegenbauer.zeros.survey import jacobi_translation_check

SAMPLE_POINTS = (Fraction(0), Fraction(1, 3), Fraction(-1, 2), Fraction(2))


class ScalarSuite(BaseSuite):
    """
    Scalar Gegenbauer layer at lambda = nu and lambda = nu + 2l.
    """

    name = 'scalar'

    def checks(self, spec: WeightSpec) -> List[IdentityCheck]:
        results = []
        for lam in sorted({spec.nu, spec.companion_lambda}):
            results.extend(self._parameter_checks(lam, spec.two_ell))
        return results

    def _parameter_checks(self, lam: Fraction, two_ell: int) -> List[IdentityCheck]:
        tag = f"lambda={format_rational(lam)}"
        n_max = self._n_max
        results = []
        for n in range(n_max + 1):
            poly = gegenbauer(n, lam)
            results.append(self._flag(f"recurrence-vs-hypergeometric(n={n}) [{tag}]",
                                      poly == hypergeometric_oracle(n, lam), poly.degree + 1))
            parity_ok = all(c == 0 for d, c in enumerate(poly.coeffs) if (d - n) % 2)
            results.append(self._flag(f"parity(n={n}) [{tag}]", parity_ok))
            round_trip = MonoPoly.monomial(n)
            results.append(self._flag(f"basis-round-trip(x^{n}) [{tag}]",
                                      geg_to_mono(mono_to_geg(round_trip, lam)) == round_trip))
            derivative = geg_to_mono(diff_geg(GegSeries(lam, [0] * n + [1])))
            results.append(self._flag(f"derivative(n={n}) [{tag}]", derivative == poly.derivative()))
        for k in range(n_max + 1):
            for n in range(k + 1, n_max + 1):
                value = inner_product(GegSeries(lam, [0] * k + [1]), GegSeries(lam, [0] * n + [1]))
                results.append(self._flag(f"orthogonality(k={k}, n={n}) [{tag}]", value.is_zero()))
        half = n_max // 2 + 1
        for k in range(half):
            for l in range(k, half):
                series = linearise(k, l, lam)
                total = sum((c * value_at_one(d, lam) for d, c in enumerate(series.coeffs)), Fraction(0))
                results.append(self._flag(f"linearise-at-one(k={k}, l={l}) [{tag}]",
                                          total == value_at_one(k, lam) * value_at_one(l, lam)))
                results.append(self._flag(f"linearise(k={k}, l={l}) [{tag}]",
                                          geg_to_mono(series) == gegenbauer(k, lam) * gegenbauer(l, lam)))
        for big_n in sorted({1, two_ell}):
            for m in range(n_max + 1):
                rebuilt = geg_to_mono(connect_integer_series(m, lam, big_n))
                results.append(self._flag(f"connection(m={m}, N={big_n}) [{tag}]", rebuilt == gegenbauer(m, lam)))
        for n in range(half):
            results.append(jacobi_translation_check(n, lam, SAMPLE_POINTS))
        return results
