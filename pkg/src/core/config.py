"""
Engine settings using Pydantic for validation and type safety.
All values can be overridden from environment variables prefixed with IFLOW_.
"""
from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Engine configuration with validation."""

    model_config = SettingsConfigDict(
        env_prefix="IFLOW_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Application
    app_name: str = Field(default="InfoFlow", description="Application name")
    debug: bool = Field(default=False, description="Enable DEBUG logging")

    # Enumeration
    guard: int = Field(
        default=2**24,
        ge=1,
        description="Maximum number of dense trajectory-table entries (IFLOW_GUARD)",
    )

    # Numerical tolerances (bits or probability mass)
    tolerance: float = Field(
        default=1e-9,
        gt=0,
        description="Identity tolerance in bits",
    )
    normalization_tolerance: float = Field(
        default=1e-12,
        gt=0,
        description="Allowed deviation of a kernel row sum from 1",
    )
    repair_tolerance: float = Field(
        default=1e-9,
        gt=0,
        description="Largest row-sum deviation that repair mode renormalizes",
    )
    clamp_threshold: float = Field(
        default=1e-9,
        gt=0,
        description="Negative information values above -threshold are clamped to 0",
    )

    # Monte Carlo
    sample_block_size: int = Field(
        default=65536,
        ge=1,
        le=2**24,
        description="Samples drawn per block; block seeds derive from the batch seed",
    )

    # Parallelism
    jobs: int = Field(
        default=1,
        ge=1,
        le=256,
        description="Default worker cap; never affects results",
    )


@lru_cache()
def get_settings() -> Settings:
    """
    Get cached engine settings.

    Using lru_cache ensures settings are loaded once and reused.
    """
    return Settings()
