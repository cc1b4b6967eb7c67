# path: matrix_gegenbauer/verification/operators_suite.py

from typing import List

from matrix_gegenbauer.matrix.operators import (certify_six_term_size, eigen_check, prop_3tr_check, prop_dod_check,
                                                prop_doe_check, six_term_gamma_check)
from matrix_gegenbauer.models import IdentityCheck, WeightSpec
from matrix_gegenbauer.polynomials.kernel import format_rational
from matrix_gegenbauer.verification.base import BaseSuite

# sizes above this are only spot-checked on the grid
SIX_TERM_CERTIFY_CAP = 3


class OperatorsSuite(BaseSuite):
    """
    Eigen-relations of both differential operators, the three differential-difference
    relations and the six-term gamma relation.

    The six-term relation is evaluated for n > 2l, where no coefficient of the
    expansion is truncated. Its certification in nu does not depend on the grid and
    runs with the first grid point only.
    """

    name = 'operators'

    def checks(self, spec: WeightSpec) -> List[IdentityCheck]:
        two_ell = spec.two_ell
        results = []
        for n in range(self._n_max + 1):
            results.append(eigen_check(n, spec))
            results.append(eigen_check(n, spec, monic=True))
            results.append(prop_3tr_check(n, spec))
            results.append(prop_dod_check(n, spec))
            results.append(prop_doe_check(n, spec))
        for n in (two_ell + 1, two_ell + 2):
            failures = [(i, j, k) for i in range(two_ell + 1) for j in range(two_ell + 1) for k in range(two_ell + 1)
                        if not six_term_gamma_check(spec.nu, n, i, j, k, two_ell)]
            results.append(self._flag(f"six-term(n={n}) [2l={two_ell}, nu={format_rational(spec.nu)}]",
                                      not failures, (two_ell + 1) ** 3,
                                      f"(i, j, k) = {failures[0]}" if failures else None))
        if spec.nu == self._config.grid[0] and two_ell <= SIX_TERM_CERTIFY_CAP:
            results.extend(certify_six_term_size(two_ell))
        return results
