# path: matrix_gegenbauer/verification/mvop_suite.py

from typing import List

from matrix_gegenbauer.matrix.connection import g_matrix
from matrix_gegenbauer.matrix.mvop import (gram_integral, h0_display, hat_p, kappa_rational_part, monic_p,
                                           symmetrizer, top_coefficient_integral, weight_moment)
from matrix_gegenbauer.models import IdentityCheck, WeightSpec
from matrix_gegenbauer.polynomials.algebra import (diagonal_matrix, identity_matrix, inverse_diagonal,
                                                   is_diagonal, is_zero_matrix, matrices_equal)
from matrix_gegenbauer.polynomials.kernel import format_rational
from matrix_gegenbauer.verification.base import BaseSuite

GRAM_DEGREE_CAP = 6


class MvopSuite(BaseSuite):
    """Recurrence-built polynomials: symmetry, derivative ladder, orthogonality and moments."""

    name = 'mvop'

    def checks(self, spec: WeightSpec) -> List[IdentityCheck]:
        tag = f"[2l={spec.two_ell}, nu={format_rational(spec.nu)}]"
        two_ell, dim = spec.two_ell, spec.dim
        raised = spec.shifted(1)
        results = []
        for n in range(self._n_max + 1):
            poly = hat_p(n, spec)
            monic = monic_p(n, spec)
            results.append(self._flag(f"monic(n={n}) {tag}", monic.degree == n
                                      and matrices_equal(monic.coefficient(n), identity_matrix(dim))))
            results.append(self._flag(f"hatP-symmetric(n={n}) {tag}", poly.transpose() == poly))
            d_n = symmetrizer(n, spec)
            conjugated = monic.lmul(d_n).rmul(inverse_diagonal(d_n))
            results.append(self._flag(f"monic-transpose(n={n}) {tag}", monic.transpose() == conjugated))
            if n > 0:
                results.append(self._flag(f"symmetrizer-shift(n={n}) {tag}",
                                          matrices_equal(d_n, symmetrizer(n - 1, raised))))
                results.append(self._flag(f"derivative-ladder(n={n}) {tag}",
                                          poly.derivative() == hat_p(n - 1, raised).scale(n)))
        gram_cap = min(self._n_max, GRAM_DEGREE_CAP)
        for n in range(gram_cap + 1):
            for m in range(n):
                gram = kappa_rational_part(gram_integral(n, m, spec))
                results.append(self._flag(f"orthogonality(n={n}, m={m}) {tag}", is_zero_matrix(gram), dim ** 2))
            norm = kappa_rational_part(gram_integral(n, n, spec))
            positive = is_diagonal(norm) and all(norm[i, i] > 0 for i in range(dim))
            results.append(self._flag(f"squared-norm(n={n}) {tag}", positive, dim ** 2))
        d_0 = symmetrizer(0, spec)
        h_0 = diagonal_matrix(h0_display(spec))
        gram_00 = kappa_rational_part(gram_integral(0, 0, spec))
        results.append(self._flag(f"h0-display {tag}", matrices_equal(gram_00, d_0 @ h_0 @ d_0), dim ** 2))
        for m in range(self._n_max + 1):
            moment = kappa_rational_part(weight_moment(m, spec))
            pattern = all(moment[i, j] == 0 for i in range(dim) for j in range(dim)
                          if abs(i - j) > m or m > two_ell or (m - i - j) % 2)
            results.append(self._flag(f"moment-vanishing(m={m}) {tag}", pattern, dim ** 2))
            if m <= two_ell:
                results.append(self._flag(f"moment-vs-g(m={m}) {tag}",
                                          matrices_equal(moment, g_matrix(m, m, spec) @ d_0 @ h_0), dim ** 2))
            elif m <= self._n_max:
                top = kappa_rational_part(top_coefficient_integral(m, spec))
                results.append(self._flag(f"top-coefficient-vanishing(m={m}) {tag}", is_zero_matrix(top), dim ** 2))
        return results
