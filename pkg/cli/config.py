"""Command-line configuration management."""

from fractions import Fraction
from functools import lru_cache
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from src.geometry.rational import parse_rational


class Settings(BaseSettings):
    """Settings loaded from ``MORSE_STRATA_*`` environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="MORSE_STRATA_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Enumeration
    enumeration_cap: int = Field(default=20, gt=0)
    enumeration_method: Literal["corral", "subsets"] = "corral"

    # Output
    output_format: Literal["text", "structured"] = "text"

    # Logging
    log_level: str = "WARNING"
    log_format: Literal["json", "text"] = "text"

    # Self-check sizes
    check_oracle_instances: int = Field(default=200, ge=0)
    check_duality_supports: int = Field(default=100, ge=0)
    check_duality_lambdas: int = Field(default=1000, ge=0)
    check_seed: int = 20240101

    # Built-in examples
    default_torus_scale: str = "1/25"

    @property
    def torus_scale(self) -> Fraction:
        """Parsed ``default_torus_scale``."""
        return parse_rational(self.default_torus_scale)


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
