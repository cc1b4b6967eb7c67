# path: matrix_gegenbauer/verification/weight_suite.py

from typing import List

from matrix_gegenbauer.matrix.weight import ldu_factors, verify_ldu, weight_entry, weight_polynomial
from matrix_gegenbauer.models import IdentityCheck, WeightSpec
from matrix_gegenbauer.polynomials.kernel import format_rational
from matrix_gegenbauer.verification.base import BaseSuite


class WeightSuite(BaseSuite):
    """LDU factorization, symmetries and sparsity of the polynomial part of the weight."""

    name = 'weight'

    def checks(self, spec: WeightSpec) -> List[IdentityCheck]:
        tag = f"[2l={spec.two_ell}, nu={format_rational(spec.nu)}]"
        two_ell = spec.two_ell
        weight = weight_polynomial(spec)
        results = [verify_ldu(spec)]
        t = [t_k for t_k, _ in ldu_factors(spec).t]
        results.append(self._flag(f"ldu-positive {tag}", all(t_k > 0 for t_k in t), len(t),
                                  f"t = {[format_rational(v) for v in t]}"))
        for i in range(spec.dim):
            for j in range(spec.dim):
                entry = weight.entry(i, j)
                results.append(self._flag(f"weight-symmetric({i}, {j}) {tag}", entry == weight.entry(j, i)))
                results.append(self._flag(f"weight-flip({i}, {j}) {tag}",
                                          entry == weight.entry(two_ell - i, two_ell - j)))
                series = weight_entry(i, j, spec)
                sparse = all(c == 0 for d, c in enumerate(series.coeffs) if (d - i - j) % 2)
                results.append(self._flag(f"weight-sparsity({i}, {j}) {tag}",
                                          entry.degree <= i + j and sparse))
        return results
