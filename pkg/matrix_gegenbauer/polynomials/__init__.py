# path: matrix_gegenbauer/polynomials/__init__.py

from .kernel import (PoleError, UnsupportedParameterError, as_rational, format_rational, gamma_ratio_shift,
                     pochhammer)
from .algebra import GegSeries, MatPoly, MonoPoly

__all__ = ['PoleError', 'UnsupportedParameterError', 'as_rational', 'format_rational', 'gamma_ratio_shift',
           'pochhammer', 'GegSeries', 'MatPoly', 'MonoPoly']
