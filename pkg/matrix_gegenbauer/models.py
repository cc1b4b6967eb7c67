# path: matrix_gegenbauer/models.py

import math
from fractions import Fraction
from typing import Any, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from matrix_gegenbauer.polynomials.kernel import as_rational, format_rational


def _parse_rational(value: Any) -> Fraction:
    if isinstance(value, float):
        raise ValueError("Floats are not accepted for exact parameters, use 'p/q'")
    return as_rational(value)


class SizeParam(BaseModel):
    """
    Matrix size of a session.

    Attributes:
        two_ell (int): Twice the spin parameter; matrices are (two_ell + 1) x (two_ell + 1).
    """
    model_config = ConfigDict(frozen=True)

    two_ell: int = Field(ge=0)

    @property
    def dim(self) -> int:
        return self.two_ell + 1


class WeightSpec(BaseModel):
    """
    Parameters of the matrix weight.

    Attributes:
        size (SizeParam): Matrix size.
        nu (Fraction): Gegenbauer parameter, strictly positive.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    size: SizeParam
    nu: Fraction

    @field_validator('nu', mode='before')
    @classmethod
    def parse_nu(cls, value: Any) -> Fraction:
        return _parse_rational(value)

    @field_validator('nu')
    @classmethod
    def positive_nu(cls, value: Fraction) -> Fraction:
        if value <= 0:
            raise ValueError(f"nu must be positive, got {format_rational(value)}")
        return value

    @classmethod
    def of(cls, two_ell: int, nu: Any) -> 'WeightSpec':
        return cls(size=SizeParam(two_ell=two_ell), nu=nu)

    @property
    def two_ell(self) -> int:
        return self.size.two_ell

    @property
    def dim(self) -> int:
        return self.size.dim

    @property
    def companion_lambda(self) -> Fraction:
        """Parameter nu + 2l of the scalar family the polynomials expand into."""
        return self.nu + self.two_ell

    def shifted(self, delta: int) -> 'WeightSpec':
        return WeightSpec(size=self.size, nu=self.nu + delta)


class KappaValue(BaseModel):
    """
    Exact weighted integral coeff * kappa(nu), kappa(nu) = pi 2^(1-2nu) Gamma(2nu) / Gamma(nu)^2.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    coeff: Fraction
    nu: Fraction

    def _check(self, other: 'KappaValue') -> None:
        if self.nu != other.nu:
            raise ValueError(f"Kappa units differ: {format_rational(self.nu)} vs {format_rational(other.nu)}")

    def __add__(self, other: 'KappaValue') -> 'KappaValue':
        self._check(other)
        return KappaValue(coeff=self.coeff + other.coeff, nu=self.nu)

    def __sub__(self, other: 'KappaValue') -> 'KappaValue':
        self._check(other)
        return KappaValue(coeff=self.coeff - other.coeff, nu=self.nu)

    def scale(self, factor: Fraction) -> 'KappaValue':
        return KappaValue(coeff=self.coeff * factor, nu=self.nu)

    def is_zero(self) -> bool:
        return self.coeff == 0

    def to_float(self) -> float:
        nu = float(self.nu)
        log_kappa = math.log(math.pi) + (1 - 2 * nu) * math.log(2) + math.lgamma(2 * nu) - 2 * math.lgamma(nu)
        return float(self.coeff) * math.exp(log_kappa)


class LDUFactors(BaseModel):
    """
    Factors of W_pol = L diag(t_k (1-x^2)^k) L^t.

    Attributes:
        lower (Any): Unipotent lower-triangular MatPoly L.
        t (List[Tuple[Fraction, int]]): Pairs (t_k, k).
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    lower: Any
    t: List[Tuple[Fraction, int]]


class IdentityCheck(BaseModel):
    """
    Outcome of an exact identity check.

    Attributes:
        name (str): Identity name as shown in reports.
        passed (bool): True if every checked cell matched.
        cells (int): Number of cells compared.
        counterexample (Optional[str]): First failing cell.
    """
    name: str
    passed: bool
    cells: int = 0
    counterexample: Optional[str] = None

    @classmethod
    def combine(cls, name: str, checks: List['IdentityCheck']) -> 'IdentityCheck':
        failed = next((c for c in checks if not c.passed), None)
        return cls(
            name=name,
            passed=failed is None,
            cells=sum(c.cells for c in checks),
            counterexample=None if failed is None else f"{failed.name}: {failed.counterexample}",
        )


class ComplexRoot(BaseModel):
    model_config = ConfigDict(frozen=True)

    re: float
    im: float
    residual: float


class ZeroFlags(BaseModel):
    """
    Classification of a root set.

    Attributes:
        all_real_in_interval (bool): Every root real and strictly inside (-1, 1).
        real_count (int): Number of real roots.
        boundary_count (int): Real roots within tolerance of +-1.
        imag_pair_count (int): Purely imaginary conjugate pairs.
        nonreal_purely_imaginary (bool): Every non-real root has zero real part.
        interlaces_with_prev (Optional[bool]): Interlacing with degree n-1, None if not comparable.
    """
    all_real_in_interval: bool = False
    real_count: int = 0
    boundary_count: int = 0
    imag_pair_count: int = 0
    nonreal_purely_imaginary: bool = False
    interlaces_with_prev: Optional[bool] = None


class ZeroReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    entry: Tuple[int, int]
    n: int
    nu: Fraction
    two_ell: int
    echelon: int
    degree: int
    roots: List[ComplexRoot] = Field(default_factory=list)
    zero_multiplicity: int = 0
    converged: bool = True
    error: Optional[str] = None
    flags: ZeroFlags = Field(default_factory=ZeroFlags)


class Trivariate(BaseModel):
    """
    Polynomial in (t, x, nu) stored as coeffs[a][b][c] for t^a x^b nu^c.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    coeffs: List[List[List[Fraction]]]

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for plane in self.coeffs for row in plane for c in row)


class ClosedForm(BaseModel):
    """
    Generating function as numerator / (1 - 2xt + t^2)^(nu + denominator_offset).

    Attributes:
        two_ell (int): Matrix size parameter.
        lambda_degree (int): Degree of the normalized coefficients in lambda.
        denominator_offset (int): Exponent offset, 2l + lambda_degree.
        numerator (List[List[Trivariate]]): Numerator matrix.
        verified_order (int): Highest t power compared against the series.
        nu_checked (Fraction): Parameter used for the series comparison.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    two_ell: int
    lambda_degree: int
    denominator_offset: int
    numerator: List[List[Trivariate]]
    verified_order: int
    nu_checked: Fraction


class SessionConfig(BaseModel):
    """
    Validated parameters of one CLI run.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    two_ell: int = Field(default=2, ge=0)
    nu: Fraction = Fraction(1)
    n_max: int = Field(default=8, ge=0)
    nu_grid: Tuple[Fraction, ...] = ()
    output_format: Literal['json', 'csv', 'text'] = 'text'
    output_dir: str = 'out'
    threads: int = Field(default=1, ge=1)
    seed: int = 0
    tol: float = Field(default=1e-8, gt=0)
    residual_tol: float = Field(default=1e-9, gt=0)
    max_degree: int = Field(default=200, ge=1)
    aberth_max_iter: int = Field(default=500, ge=1)
    polish_dps: int = Field(default=60, ge=20)

    @field_validator('nu', mode='before')
    @classmethod
    def parse_nu(cls, value: Any) -> Fraction:
        return _parse_rational(value)

    @field_validator('nu_grid', mode='before')
    @classmethod
    def parse_grid(cls, value: Any) -> Tuple[Fraction, ...]:
        if isinstance(value, str):
            value = [part for part in value.split(',') if part.strip()]
        return tuple(_parse_rational(v) for v in value)

    @model_validator(mode='after')
    def positive_parameters(self) -> 'SessionConfig':
        if self.nu <= 0:
            raise ValueError(f"nu must be positive, got {format_rational(self.nu)}")
        if any(v <= 0 for v in self.nu_grid):
            raise ValueError("All nu grid values must be positive")
        return self

    @property
    def grid(self) -> Tuple[Fraction, ...]:
        return self.nu_grid or (self.nu,)

    def weight_spec(self, nu: Optional[Fraction] = None) -> WeightSpec:
        return WeightSpec.of(self.two_ell, self.nu if nu is None else nu)
