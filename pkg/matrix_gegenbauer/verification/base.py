# path: matrix_gegenbauer/verification/base.py

from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from typing import List

import structlog

from matrix_gegenbauer.models import IdentityCheck, SessionConfig, WeightSpec
from matrix_gegenbauer.polynomials.kernel import format_rational


class BaseSuite(ABC):
    """
    Abstract base class for a group of exact identity checks.

    A suite runs its checks once per nu of the session grid; the grid points run on a
    thread pool and results come back in grid order.

    :param config: Validated session parameters.
    """

    name: str = 'base'

    def __init__(self, config: SessionConfig):
        self._logger = structlog.get_logger()
        self._config = config
        self._n_max = config.n_max

    @abstractmethod
    def checks(self, spec: WeightSpec) -> List[IdentityCheck]:
        """
        Run every check of the suite for one weight.

        :param spec: Weight parameters.
        :return: One IdentityCheck per identity, passed or not.
        """
        pass

    def run(self) -> List[IdentityCheck]:
        """
        Run the suite over the nu grid.

        :return: All checks in grid order.
        """
        specs = [self._config.weight_spec(nu) for nu in self._config.grid]
        with ThreadPoolExecutor(max_workers=self._config.threads) as executor:
            batches = list(executor.map(self._checks_logged, specs))
        results = [check for batch in batches for check in batch]
        failed = [c for c in results if not c.passed]
        self._logger.info("Suite finished", suite=self.name, checks=len(results), failed=len(failed))
        return results

    def _checks_logged(self, spec: WeightSpec) -> List[IdentityCheck]:
        with structlog.contextvars.bound_contextvars(suite=self.name, two_ell=spec.two_ell,
                                                     nu=format_rational(spec.nu)):
            self._logger.debug("Running suite")
            results = self.checks(spec)
            for check in results:
                if not check.passed:
                    self._logger.error("Identity failed", check=check.name, counterexample=check.counterexample)
        return results

    @staticmethod
    def _flag(name: str, passed: bool, cells: int = 1, counterexample: str = None) -> IdentityCheck:
        return IdentityCheck(name=name, passed=passed, cells=cells,
                             counterexample=None if passed else counterexample)
