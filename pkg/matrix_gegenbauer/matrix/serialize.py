# path: matrix_gegenbauer/matrix/serialize.py

import json
from typing import Any, Dict, List

from matrix_gegenbauer.matrix.connection import f_terms
from matrix_gegenbauer.matrix.mvop import hat_p
from matrix_gegenbauer.models import ClosedForm, Trivariate, WeightSpec
from matrix_gegenbauer.polynomials.algebra import (MatPoly, matrix_from_strings, matrix_to_strings,
                                                   mono_times_matrix)
from matrix_gegenbauer.polynomials.gegenbauer import gegenbauer
from matrix_gegenbauer.polynomials.kernel import as_rational, format_rational


def matpoly_to_dict(poly: MatPoly, spec: WeightSpec, n: int) -> Dict[str, Any]:
    """Monomial-basis record with coefficients as nested "p/q" strings, lowest power first."""
    return {
        'two_ell': spec.two_ell,
        'nu': format_rational(spec.nu),
        'n': n,
        'basis': 'monomial',
        'coeffs': [matrix_to_strings(c) for c in poly.coeffs],
    }


def gegenbauer_terms_to_dict(n: int, spec: WeightSpec) -> Dict[str, Any]:
    """hatP_n as F_{k,n} matrices against C^(nu+2l)_{n-k}."""
    return {
        'two_ell': spec.two_ell,
        'nu': format_rational(spec.nu),
        'n': n,
        'basis': 'gegenbauer',
        'lambda': format_rational(spec.companion_lambda),
        'coeffs': [{'k': k, 'degree': n - k, 'matrix': matrix_to_strings(matrix)}
                   for k, matrix in enumerate(f_terms(n, spec))],
    }


def hat_p_to_dict(n: int, spec: WeightSpec, basis: str = 'monomial') -> Dict[str, Any]:
    if basis == 'gegenbauer':
        return gegenbauer_terms_to_dict(n, spec)
    if basis != 'monomial':
        raise ValueError(f"Unknown basis: {basis}")
    return matpoly_to_dict(hat_p(n, spec), spec, n)


def matpoly_from_dict(record: Dict[str, Any]) -> MatPoly:
    """
    Parse a record written by matpoly_to_dict or gegenbauer_terms_to_dict.

    :param record: (Dict[str, Any]) Decoded JSON object.
    :return: (MatPoly) The polynomial in the monomial basis.
    """
    size = record['two_ell'] + 1
    if record['basis'] == 'monomial':
        return MatPoly([matrix_from_strings(c) for c in record['coeffs']], size)
    lam = as_rational(record['lambda'])
    total = MatPoly.zero(size)
    for term in record['coeffs']:
        total = total + mono_times_matrix(gegenbauer(term['degree'], lam), matrix_from_strings(term['matrix']))
    return total


def _trivariate_strings(poly: Trivariate) -> List[List[List[str]]]:
    return [[[format_rational(c) for c in row] for row in plane] for plane in poly.coeffs]


def closed_form_to_dict(form: ClosedForm) -> Dict[str, Any]:
    """Numerator tensors indexed [t][x][nu] and the exponent nu + denominator_offset."""
    return {
        'two_ell': form.two_ell,
        'lambda_degree': form.lambda_degree,
        'denominator': {'base': '1-2xt+t^2', 'exponent': f"nu+{form.denominator_offset}"},
        'denominator_offset': form.denominator_offset,
        'verified_order': form.verified_order,
        'nu_checked': format_rational(form.nu_checked),
        'numerator': [[_trivariate_strings(entry) for entry in row] for row in form.numerator],
    }


def closed_form_from_dict(record: Dict[str, Any]) -> ClosedForm:
    numerator = [[Trivariate(coeffs=[[[as_rational(c) for c in row] for row in plane] for plane in entry])
                  for entry in row] for row in record['numerator']]
    return ClosedForm(two_ell=record['two_ell'], lambda_degree=record['lambda_degree'],
                      denominator_offset=record['denominator_offset'], numerator=numerator,
                      verified_order=record['verified_order'], nu_checked=as_rational(record['nu_checked']))


def dumps(record: Dict[str, Any]) -> str:
    return json.dumps(record, indent=2, sort_keys=True)
