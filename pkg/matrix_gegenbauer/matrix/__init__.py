# path: matrix_gegenbauer/matrix/__init__.py

from .weight import AlphaIndexError, alpha_coeff, ldu_factors, verify_ldu, weight_entry, weight_polynomial
from .mvop import gram_integral, hat_p, monic_p, recurrence_coeffs, symmetrizer, weight_moment
from .connection import f_matrix, g_matrix, gamma_coeff, phi_coeff, synthesize_hat_p
from .operators import apply_dod, apply_doe, prop_3tr_check, prop_dod_check, prop_doe_check, six_term_gamma_check
from .generating import (InterpolationMismatchError, SeriesMismatchError, closed_form, poly_in_lambda,
                         series_coefficients, tilde_f)

__all__ = [
    'AlphaIndexError', 'alpha_coeff', 'ldu_factors', 'verify_ldu', 'weight_entry', 'weight_polynomial',
    'gram_integral', 'hat_p', 'monic_p', 'recurrence_coeffs', 'symmetrizer', 'weight_moment',
    'f_matrix', 'g_matrix', 'gamma_coeff', 'phi_coeff', 'synthesize_hat_p',
    'apply_dod', 'apply_doe', 'prop_3tr_check', 'prop_dod_check', 'prop_doe_check', 'six_term_gamma_check',
    'InterpolationMismatchError', 'SeriesMismatchError', 'closed_form', 'poly_in_lambda', 'series_coefficients',
    'tilde_f',
]
