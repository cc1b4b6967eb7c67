# path: matrix_gegenbauer/__init__.py

from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

import structlog

from matrix_gegenbauer.matrix.connection import synthesize_hat_p
from matrix_gegenbauer.matrix.generating import closed_form
from matrix_gegenbauer.matrix.mvop import hat_p
from matrix_gegenbauer.matrix.serialize import closed_form_to_dict, hat_p_to_dict
from matrix_gegenbauer.models import IdentityCheck, SessionConfig, ZeroReport
from matrix_gegenbauer.polynomials.kernel import format_rational
from matrix_gegenbauer.verification import SuiteFactory
from matrix_gegenbauer.zeros.survey import survey


class CrossCheckError(RuntimeError):
    """Raised when the recurrence and connection constructions of hatP_n disagree."""


class MatrixGegenbauerSession:
    """
    Entry point tying the verification suites, polynomial synthesis, generating functions and
    zero surveys to one validated session configuration.
    """

    def __init__(self, config: SessionConfig) -> None:
        """
        Initialize the session.

        :param config: (SessionConfig) Validated session parameters.
        """
        self._config = config
        self._logger = structlog.get_logger()

    @property
    def config(self) -> SessionConfig:
        return self._config

    def verify(self, suite: str) -> List[IdentityCheck]:
        """
        Run one verification suite, or all of them, over the nu grid.

        :param suite: (str) Suite name or 'all'.
        :return: List[IdentityCheck]: Every check, passed or failed.
        """
        results = []
        for runner in SuiteFactory.create_suites(suite, self._config):
            self._logger.info("Running verification suite", suite=runner.name, two_ell=self._config.two_ell,
                              grid=[format_rational(v) for v in self._config.grid], n_max=self._config.n_max)
            results.extend(runner.run())
        return results

    def hat_p(self, n: int, basis: str = 'monomial') -> Dict[str, Any]:
        """
        Serialized hatP_n after confirming both constructions agree.

        :param n: (int) Degree, at most the session's n_max.
        :param basis: (str) 'monomial' or 'gegenbauer'.
        :return: Dict[str, Any]: JSON-ready record.
        :raises CrossCheckError: If recurrence and connection coefficients disagree.
        """
        if not 0 <= n <= self._config.n_max:
            raise ValueError(f"Degree must lie in 0..{self._config.n_max}, got {n}")
        spec = self._config.weight_spec()
        if hat_p(n, spec) != synthesize_hat_p(n, spec):
            self._logger.error("Constructions of hatP disagree", n=n, two_ell=spec.two_ell,
                               nu=format_rational(spec.nu))
            raise CrossCheckError(f"Recurrence and connection constructions of hatP_{n} differ")
        return hat_p_to_dict(n, spec, basis)

    def genfun(self) -> Dict[str, Any]:
        """
        Closed form of the generating function, verified against the series at the session nu.

        :return: Dict[str, Any]: JSON-ready closed form.
        """
        return closed_form_to_dict(closed_form(self._config.weight_spec()))

    def zeros(self, n_values: Sequence[int], entries: Optional[Sequence[Tuple[int, int]]] = None,
              echelon_filter: Optional[int] = None) -> List[ZeroReport]:
        """
        Zero reports over the nu grid.

        :param n_values: (Sequence[int]) Degrees to survey.
        :param entries: (Optional[Sequence[Tuple[int, int]]]) Entries to survey, all by default.
        :param echelon_filter: (Optional[int]) Keep only entries of this echelon.
        :return: List[ZeroReport]: Reports ordered by nu, then (n, i, j).
        """
        reports = []
        for nu in self._config.grid:
            reports.extend(survey(self._config, nu, n_values, entries, echelon_filter))
        return reports

    def zero_summary(self, reports: Sequence[ZeroReport]) -> Dict[str, Any]:
        """
        Counts behind the realness, interlacing and imaginary-pair assertions.

        :param reports: (Sequence[ZeroReport]) Survey output.
        :return: Dict[str, Any]: Counters and the three assertion outcomes.
        """
        low_echelon = [r for r in reports if r.echelon <= 2 and r.degree >= 1]
        interlacing = [r.flags.interlaces_with_prev for r in reports if r.flags.interlaces_with_prev is not None]
        return {
            'reports': len(reports),
            'failed': sum(1 for r in reports if not r.converged),
            'roots': sum(len(r.roots) for r in reports),
            'imag_pairs': sum(r.flags.imag_pair_count for r in reports),
            'real_low_echelon': all(r.flags.all_real_in_interval for r in low_echelon),
            'purely_imaginary': all(r.flags.nonreal_purely_imaginary for r in reports if r.converged),
            'real_in_interval': all(abs(root.re) < 1 for r in reports for root in r.roots
                                    if abs(root.im) < self._config.tol),
            'interlacing': all(interlacing),
            'interlacing_compared': len(interlacing),
        }


def nu_label(nu: Fraction) -> str:
    return format_rational(nu).replace('/', '_')


__all__ = ['CrossCheckError', 'MatrixGegenbauerSession', 'nu_label']
