# path: matrix_gegenbauer/verification/factory.py

from typing import Dict, List, Type

from matrix_gegenbauer.models import SessionConfig
from .base import BaseSuite
from .connection_suite import ConnectionSuite
from .genfun_suite import GenfunSuite
from .mvop_suite import MvopSuite
from .operators_suite import OperatorsSuite
from .scalar_suite import ScalarSuite
from .weight_suite import WeightSuite

SUITES: Dict[str, Type[BaseSuite]] = {
    'scalar': ScalarSuite,
    'weight': WeightSuite,
    'mvop': MvopSuite,
    'connection': ConnectionSuite,
    'operators': OperatorsSuite,
    'genfun': GenfunSuite,
}


class SuiteFactory:
    """
    Factory class for creating verification suites by name.
    """

    @staticmethod
    def create_suite(name: str, config: SessionConfig) -> BaseSuite:
        """
        Create the suite registered under a name.

        :param name: Suite name.
        :param config: Validated session parameters.
        :return: An instance of BaseSuite.
        :raises ValueError: If the name is unknown.
        """
        try:
            return SUITES[name](config)
        except KeyError:
            raise ValueError(f"Unsupported verification suite: {name}")

    @staticmethod
    def create_suites(name: str, config: SessionConfig) -> List[BaseSuite]:
        """
        Create one suite, or every suite in dependency order for 'all'.

        :param name: Suite name or 'all'.
        :param config: Validated session parameters.
        :return: List of suites to run.
        """
        if name == 'all':
            return [suite(config) for suite in SUITES.values()]
        return [SuiteFactory.create_suite(name, config)]
