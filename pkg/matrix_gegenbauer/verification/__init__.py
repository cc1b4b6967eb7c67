# path: matrix_gegenbauer/verification/__init__.py

from .factory import SUITES, SuiteFactory
from .base import BaseSuite

__all__ = [
    'SUITES',
    'SuiteFactory',
    'BaseSuite',
]
