# path: matrix_gegenbauer/verification/connection_suite.py

from typing import List

from matrix_gegenbauer.matrix.connection import (double_sum_check, g_weight_symmetry_check, inversion_check,
                                                 m_expansion_check, scalar_consistency_check, shift_lemma_check,
                                                 structure_check, synthesis_check, term_count_check,
                                                 upper_triangular_shift_check)
from matrix_gegenbauer.models import IdentityCheck, WeightSpec
from matrix_gegenbauer.verification.base import BaseSuite

DOUBLE_SUM_CAP = 10
DIAGONAL_SHIFT_CAP = 3


class ConnectionSuite(BaseSuite):
    """Expansions between hatP_n and scalar Gegenbauer polynomials, in both directions."""

    name = 'connection'

    def checks(self, spec: WeightSpec) -> List[IdentityCheck]:
        results = []
        for n in range(self._n_max + 1):
            results.append(synthesis_check(n, spec))
            results.append(inversion_check(n, spec))
            results.append(structure_check(n, spec))
            results.append(term_count_check(n, spec))
            results.append(scalar_consistency_check(n, spec))
            results.append(g_weight_symmetry_check(n, spec))
            results.append(m_expansion_check(n, spec))
            if n <= DOUBLE_SUM_CAP:
                results.extend(double_sum_check(s, n, spec) for s in range(n // 2 + 1))
        results.append(shift_lemma_check(spec, self._n_max))
        results.append(upper_triangular_shift_check(spec, DIAGONAL_SHIFT_CAP))
        return results
