# path: matrix_gegenbauer/zeros/__init__.py

from .roots import ConvergenceFailureError, DegreeTooLargeError, find_roots
from .survey import DegenerateInputError, classify, echelon, entry_poly, interlace_check, survey
from .export import render_csv, render_svg, write_survey

__all__ = [
    'ConvergenceFailureError', 'DegreeTooLargeError', 'find_roots',
    'DegenerateInputError', 'classify', 'echelon', 'entry_poly', 'interlace_check', 'survey',
    'render_csv', 'render_svg', 'write_survey',
]
