# path: tests/conftest.py

import os
from fractions import Fraction

import hypothesis
import pytest

from matrix_gegenbauer.models import SessionConfig, WeightSpec

hypothesis.settings.register_profile("dev", max_examples=25, deadline=None)
hypothesis.settings.register_profile("ci", max_examples=200, deadline=None)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "dev"))

NU_GRID = [Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(3), Fraction(7, 3)]


@pytest.fixture(params=NU_GRID, ids=lambda nu: f"nu={nu}")
def nu(request) -> Fraction:
    return request.param


@pytest.fixture(params=[0, 1, 2, 3], ids=lambda v: f"2l={v}")
def two_ell(request) -> int:
    return request.param


@pytest.fixture
def spec(two_ell, nu) -> WeightSpec:
    return WeightSpec.of(two_ell, nu)


@pytest.fixture
def session_config(tmp_path) -> SessionConfig:
    return SessionConfig(two_ell=2, nu='3', n_max=6, output_dir=str(tmp_path / 'out'))
