# path: matrix_gegenbauer/config.py

from typing import Literal
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Config(BaseSettings):
    model_config = SettingsConfigDict(env_file='.env', env_prefix='MVG_', extra='ignore')

    # Common Configuration
    ENV: Literal['dev', 'prod', 'test'] = 'dev'
    LOG_LEVEL: Literal['debug', 'info', 'warning', 'error'] = 'info'
    LOGGING_DIR: str = Field(default='logs')

    # Session defaults
    TWO_ELL: int = 2
    NU: str = '1'
    N_MAX: int = 8
    NU_GRID: str = ''
    OUTPUT_FORMAT: Literal['json', 'csv', 'text'] = 'text'
    OUTPUT_DIR: str = 'out'
    THREADS: int = 1
    SEED: int = 0

    # Zero finding
    TOL: float = 1e-8
    RESIDUAL_TOL: float = 1e-9
    MAX_DEGREE: int = 200
    ABERTH_MAX_ITER: int = 500
    POLISH_DPS: int = 60


def get_config() -> Config:
    config = Config()  # type: ignore
    if config.THREADS < 1:
        raise ValueError(f"THREADS must be at least 1, got {config.THREADS}")
    if config.TWO_ELL < 0:
        raise ValueError(f"TWO_ELL must be nonnegative, got {config.TWO_ELL}")
    return config
