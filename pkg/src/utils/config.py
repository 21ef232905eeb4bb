from fractions import Fraction
from functools import lru_cache
from typing import Optional

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Config(BaseSettings):
    """Application configuration"""

    model_config = SettingsConfigDict(env_file=".env", env_prefix="ALGEBRA_", extra="ignore")

    # Hecke parameter used by the builtin constructors and the CLI
    DEFAULT_Q: str = "3"

    # Degree caps
    POINCARE_MAX_DEGREE: int = 6
    COMMUTANT_MAX_DEGREE: int = 4
    SIMPLICITY_MAX_DIM: int = 6

    # Randomized parts (simplicity test, property suites)
    RANDOM_SEED: int = 20240601
    NORTON_ATTEMPTS: int = 64

    # Logging
    LOG_LEVEL: str = "INFO"
    LOG_FILE: Optional[str] = None
    LOG_JSON: bool = False

    DATA_DIR: str = "data"

    @field_validator("DEFAULT_Q")
    @classmethod
    def _check_q(cls, value: str) -> str:
        q = Fraction(value)
        if q == 0 or q == -1:
            raise ValueError(f"q must avoid 0 and -1, got {value}")
        return value

    @property
    def default_q(self) -> Fraction:
        return Fraction(self.DEFAULT_Q)

    @property
    def logging_params(self):
        return {
            "level": self.LOG_LEVEL,
            "log_file": self.LOG_FILE,
            "serialize": self.LOG_JSON,
        }


@lru_cache(maxsize=1)
def get_settings() -> Config:
    return Config()
