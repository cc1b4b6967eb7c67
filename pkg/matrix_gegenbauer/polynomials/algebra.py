# path: matrix_gegenbauer/polynomials/algebra.py

from fractions import Fraction
from typing import Callable, Iterable, List, Sequence, Tuple, Union

import numpy as np

from matrix_gegenbauer.polynomials.kernel import as_rational, format_rational

Scalar = Union[int, Fraction]


# --- dense rational matrices -------------------------------------------------

def rat_matrix(rows: Iterable[Iterable[Scalar]]) -> np.ndarray:
    """Build a read-only object array of Fractions from nested rows."""
    matrix = np.array([[Fraction(v) for v in row] for row in rows], dtype=object)
    matrix.flags.writeable = False
    return matrix


def zero_matrix(size: int) -> np.ndarray:
    return rat_matrix([[0] * size for _ in range(size)])


def identity_matrix(size: int) -> np.ndarray:
    return rat_matrix([[int(i == j) for j in range(size)] for i in range(size)])


def diagonal_matrix(values: Sequence[Scalar]) -> np.ndarray:
    size = len(values)
    return rat_matrix([[values[i] if i == j else 0 for j in range(size)] for i in range(size)])


def matrix_from_function(size: int, entry: Callable[[int, int], Scalar]) -> np.ndarray:
    return rat_matrix([[entry(i, j) for j in range(size)] for i in range(size)])


def flip_matrix(size: int) -> np.ndarray:
    """The antidiagonal permutation J."""
    return matrix_from_function(size, lambda i, j: int(i + j == size - 1))


def freeze(matrix: np.ndarray) -> np.ndarray:
    frozen = np.array(matrix, dtype=object)
    frozen.flags.writeable = False
    return frozen


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return freeze(a @ b - b @ a)


def inverse_diagonal(matrix: np.ndarray) -> np.ndarray:
    return diagonal_matrix([1 / Fraction(matrix[i, i]) for i in range(matrix.shape[0])])


def matrices_equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and bool((a == b).all())


def is_zero_matrix(matrix: np.ndarray) -> bool:
    return all(v == 0 for v in matrix.flat)


def is_diagonal(matrix: np.ndarray) -> bool:
    size = matrix.shape[0]
    return all(matrix[i, j] == 0 for i in range(size) for j in range(size) if i != j)


def matrix_to_strings(matrix: np.ndarray) -> List[List[str]]:
    return [[format_rational(v) for v in row] for row in matrix]


def matrix_from_strings(rows: Sequence[Sequence[str]]) -> np.ndarray:
    return rat_matrix([[as_rational(v) for v in row] for row in rows])


# --- univariate polynomials --------------------------------------------------

class MonoPoly:
    """
    Immutable polynomial with Fraction coefficients in the monomial basis.

    Coefficients are stored in ascending order without trailing zeros, so the
    zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ('_coeffs',)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        values = [Fraction(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self._coeffs: Tuple[Fraction, ...] = tuple(values)

    @classmethod
    def constant(cls, value: Scalar) -> 'MonoPoly':
        return cls([value])

    @classmethod
    def monomial(cls, degree: int, value: Scalar = 1) -> 'MonoPoly':
        return cls([0] * degree + [value])

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return Fraction(0)

    @property
    def leading(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MonoPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self == MonoPoly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        terms = [f"{format_rational(c)}*x^{d}" for d, c in enumerate(self._coeffs) if c]
        return f"MonoPoly({' + '.join(terms) or '0'})"

    def __add__(self, other: Union['MonoPoly', Scalar]) -> 'MonoPoly':
        if not isinstance(other, MonoPoly):
            other = MonoPoly.constant(other)
        size = max(len(self._coeffs), len(other._coeffs))
        return MonoPoly(self.coefficient(d) + other.coefficient(d) for d in range(size))

    __radd__ = __add__

    def __neg__(self) -> 'MonoPoly':
        return MonoPoly(-c for c in self._coeffs)

    def __sub__(self, other: Union['MonoPoly', Scalar]) -> 'MonoPoly':
        if not isinstance(other, MonoPoly):
            other = MonoPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other: Scalar) -> 'MonoPoly':
        return MonoPoly.constant(other) - self

    def __mul__(self, other: Union['MonoPoly', Scalar]) -> 'MonoPoly':
        if not isinstance(other, MonoPoly):
            factor = Fraction(other)
            return MonoPoly(c * factor for c in self._coeffs)
        if self.is_zero() or other.is_zero():
            return MonoPoly()
        product = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for a_power, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for b_power, b in enumerate(other._coeffs):
                product[a_power + b_power] += a * b
        return MonoPoly(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'MonoPoly':
        result = MonoPoly.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def shift(self, power: int) -> 'MonoPoly':
        """Multiply by x**power."""
        if self.is_zero():
            return self
        return MonoPoly([0] * power + list(self._coeffs))

    def derivative(self) -> 'MonoPoly':
        return MonoPoly(d * c for d, c in enumerate(self._coeffs) if d > 0)

    def evaluate(self, x: Scalar) -> Fraction:
        x = Fraction(x)
        result = Fraction(0)
        for c in reversed(self._coeffs):
            result = result * x + c
        return result


class GegSeries:
    """Finite sum of coeffs[m] * C_m^(lam)(x) at a fixed Gegenbauer parameter."""

    __slots__ = ('_lam', '_coeffs')

    def __init__(self, lam: Scalar, coeffs: Iterable[Scalar] = ()):
        values = [Fraction(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self._lam = Fraction(lam)
        self._coeffs: Tuple[Fraction, ...] = tuple(values)

    @property
    def lam(self) -> Fraction:
        return self._lam

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, degree: int) -> Fraction:
        if 0 <= degree < len(self._coeffs):
            return self._coeffs[degree]
        return Fraction(0)

    def nonzero_terms(self) -> int:
        return sum(1 for c in self._coeffs if c != 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GegSeries):
            return NotImplemented
        return self._lam == other._lam and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._lam, self._coeffs))

    def __repr__(self) -> str:
        return f"GegSeries(lam={format_rational(self._lam)}, coeffs={[format_rational(c) for c in self._coeffs]})"

    def __add__(self, other: 'GegSeries') -> 'GegSeries':
        if self._lam != other._lam:
            raise ValueError("Cannot add Gegenbauer series with different parameters")
        size = max(len(self._coeffs), len(other._coeffs))
        return GegSeries(self._lam, (self.coefficient(d) + other.coefficient(d) for d in range(size)))

    def __mul__(self, factor: Scalar) -> 'GegSeries':
        factor = Fraction(factor)
        return GegSeries(self._lam, (c * factor for c in self._coeffs))

    __rmul__ = __mul__


# --- matrix polynomials ------------------------------------------------------

class MatPoly:
    """
    Square matrix polynomial sum_d coeffs[d] * x**d with rational matrix coefficients.
    """

    __slots__ = ('_coeffs', '_size')

    def __init__(self, coeffs: Iterable[np.ndarray], size: int):
        arrays = [freeze(c) for c in coeffs]
        while arrays and is_zero_matrix(arrays[-1]):
            arrays.pop()
        for array in arrays:
            if array.shape != (size, size):
                raise ValueError(f"Coefficient shape {array.shape} does not match size {size}")
        self._coeffs: Tuple[np.ndarray, ...] = tuple(arrays)
        self._size = size

    @classmethod
    def constant(cls, matrix: np.ndarray) -> 'MatPoly':
        return cls([matrix], matrix.shape[0])

    @classmethod
    def zero(cls, size: int) -> 'MatPoly':
        return cls([], size)

    @classmethod
    def from_entries(cls, entries: Sequence[Sequence[MonoPoly]]) -> 'MatPoly':
        size = len(entries)
        degree = max((p.degree for row in entries for p in row), default=-1)
        coeffs = [matrix_from_function(size, lambda i, j, d=d: entries[i][j].coefficient(d))
                  for d in range(degree + 1)]
        return cls(coeffs, size)

    @property
    def size(self) -> int:
        return self._size

    @property
    def coeffs(self) -> Tuple[np.ndarray, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, power: int) -> np.ndarray:
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return zero_matrix(self._size)

    def entry(self, i: int, j: int) -> MonoPoly:
        return MonoPoly(c[i, j] for c in self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatPoly):
            return NotImplemented
        return (self._size == other._size and len(self._coeffs) == len(other._coeffs)
                and all(matrices_equal(a, b) for a, b in zip(self._coeffs, other._coeffs)))

    def __hash__(self) -> int:
        return hash((self._size, tuple(tuple(c.flat) for c in self._coeffs)))

    def __repr__(self) -> str:
        return f"MatPoly(size={self._size}, degree={self.degree})"

    def __add__(self, other: 'MatPoly') -> 'MatPoly':
        length = max(len(self._coeffs), len(other._coeffs))
        return MatPoly((self.coefficient(d) + other.coefficient(d) for d in range(length)), self._size)

    def __neg__(self) -> 'MatPoly':
        return MatPoly((-c for c in self._coeffs), self._size)

    def __sub__(self, other: 'MatPoly') -> 'MatPoly':
        return self + (-other)

    def scale(self, factor: Scalar) -> 'MatPoly':
        factor = Fraction(factor)
        return MatPoly((c * factor for c in self._coeffs), self._size)

    def lmul(self, matrix: np.ndarray) -> 'MatPoly':
        """Constant matrix times self."""
        return MatPoly((matrix @ c for c in self._coeffs), self._size)

    def rmul(self, matrix: np.ndarray) -> 'MatPoly':
        """Self times a constant matrix."""
        return MatPoly((c @ matrix for c in self._coeffs), self._size)

    def __matmul__(self, other: 'MatPoly') -> 'MatPoly':
        if self.is_zero() or other.is_zero():
            return MatPoly.zero(self._size)
        product = [zero_matrix(self._size) for _ in range(self.degree + other.degree + 1)]
        for a_power, a in enumerate(self._coeffs):
            for b_power, b in enumerate(other._coeffs):
                product[a_power + b_power] = product[a_power + b_power] + a @ b
        return MatPoly(product, self._size)

    def mul_x(self, power: int = 1) -> 'MatPoly':
        if self.is_zero():
            return self
        return MatPoly([zero_matrix(self._size)] * power + list(self._coeffs), self._size)

    def derivative(self) -> 'MatPoly':
        return MatPoly((c * d for d, c in enumerate(self._coeffs) if d > 0), self._size)

    def transpose(self) -> 'MatPoly':
        return MatPoly((c.T for c in self._coeffs), self._size)


def mono_times_matrix(poly: MonoPoly, matrix: np.ndarray) -> MatPoly:
    """The matrix polynomial poly(x) * matrix."""
    return MatPoly((matrix * c for c in poly.coeffs), matrix.shape[0])
