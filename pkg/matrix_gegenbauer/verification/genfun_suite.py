# path: matrix_gegenbauer/verification/genfun_suite.py

from typing import List

from matrix_gegenbauer.matrix.generating import (InterpolationMismatchError, SeriesMismatchError, closed_form,
                                                 numerator_is_integral, poly_in_lambda, series_coefficients,
                                                 tilde_f, verification_order)
from matrix_gegenbauer.models import IdentityCheck, WeightSpec
from matrix_gegenbauer.polynomials.algebra import matrices_equal
from matrix_gegenbauer.polynomials.kernel import format_rational
from matrix_gegenbauer.verification.base import BaseSuite


class GenfunSuite(BaseSuite):
    """Renormalized coefficients, their lambda-polynomial structure and the verified closed form."""

    name = 'genfun'

    def checks(self, spec: WeightSpec) -> List[IdentityCheck]:
        two_ell = spec.two_ell
        tag = f"[2l={two_ell}, nu={format_rational(spec.nu)}]"
        raised = spec.shifted(1)
        results = []
        for n in range(1, self._n_max + 1):
            # tilde_f(k, n-1) vanishes for k = n, so only shared support is compared
            support = range(min(n - 1, two_ell) + 1)
            same = all(matrices_equal(tilde_f(k, n, spec), tilde_f(k, n - 1, raised)) for k in support)
            results.append(self._flag(f"tilde-f-depends-on-nu-plus-n(n={n}) {tag}", same, len(support)))
        for k in range(two_ell + 1):
            try:
                poly_in_lambda(k, spec)
                results.append(self._flag(f"lambda-polynomial(k={k}) {tag}", True, spec.dim ** 2))
            except InterpolationMismatchError as e:
                results.append(self._flag(f"lambda-polynomial(k={k}) {tag}", False, spec.dim ** 2, str(e)))
        order = verification_order(two_ell)
        for n, coefficient in enumerate(series_coefficients(spec, order)):
            parity = all(c == 0 for i in range(spec.dim) for j in range(spec.dim)
                         for d, c in enumerate(coefficient.entry(i, j).coeffs) if (d - n - i - j) % 2)
            results.append(self._flag(f"series-parity(n={n}) {tag}", parity, spec.dim ** 2))
        try:
            form = closed_form(spec, order)
            results.append(self._flag(f"closed-form(order={order}) {tag}", True, order + 1))
            if two_ell <= 2:
                results.append(self._flag(f"closed-form-integral {tag}", numerator_is_integral(form)))
        except SeriesMismatchError as e:
            results.append(self._flag(f"closed-form(order={order}) {tag}", False, order + 1, str(e)))
        return results
