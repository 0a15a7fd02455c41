"""
Engine settings for sectio.
Centralizes search budgets, order caps and logging so the library and the CLI
agree on one set of defaults.
"""

from pathlib import Path
from typing import Literal, Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

# Hard ceiling for the configurable order cap
ORDER_CAP_LIMIT = 256


class Settings(BaseSettings):
    """
    Settings configurable via environment variables (prefix SECTIO_) or .env files.
    Provides type safety and validation through Pydantic.
    """

    # Environment
    ENV: Literal["development", "production"] = Field("development", description="Environment mode")
    DEBUG: bool = Field(False, description="Debug mode flag")

    # Application
    APP_NAME: str = "sectio"
    APP_VERSION: str = "0.1.0"

    BASE_DIR: Path = Path(__file__).parent.parent.parent

    # Logging - documents go to stdout, so the console handler uses stderr
    LOG_LEVEL: str = Field("WARNING", description="Logging level")
    LOG_FILE: Optional[str] = Field(None, description="Log file path")

    # Group construction
    MAX_ORDER: int = Field(64, description="Largest group order any constructor may build")
    EXHAUSTIVE_CHECK_ORDER: int = Field(
        64,
        description="Associativity is checked on all triples up to this order"
    )
    ASSOCIATIVITY_SAMPLES: int = Field(
        100_000,
        description="Random triples checked above the exhaustive order"
    )
    RANDOM_SEED: int = Field(0, description="Seed for sampled checks")

    # Search budgets - exhausting one is an error, never a silent answer
    SEARCH_BUDGET_NODES: int = Field(10_000_000, description="Node budget of homomorphism searches")
    COVER_BUDGET_NODES: int = Field(100_000_000, description="Branch budget of the minimum cover solver")
    COBOUNDARY_BUDGET: int = Field(
        10_000_000,
        description="Largest cochain search space tried before the section oracle takes over"
    )

    # Verification and catalog
    CATALOG_MAX_ORDER: int = Field(16, description="Default largest order in the generated catalog")
    COVERS_MAX_ORDER: int = Field(24, description="Largest group whose minimum covers are enumerated")
    ORACLE_MAX_ORDER: int = Field(16, description="Largest codomain checked against unrestricted oracles")
    PAIR_CHECK_LIMIT: int = Field(6, description="Partner homomorphisms tried per case in pair checks")
    JOBS: int = Field(1, description="Worker processes for batch verification")

    # CLI
    MAX_INPUT_BYTES: int = Field(4096, description="Longest accepted expression")

    @field_validator("MAX_ORDER", mode="after")
    def check_max_order(cls, v):
        if not 1 <= v <= ORDER_CAP_LIMIT:
            raise ValueError(f"MAX_ORDER must lie in [1, {ORDER_CAP_LIMIT}], got {v}")
        return v

    @field_validator("JOBS", mode="after")
    def check_jobs(cls, v):
        return max(1, v)

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="SECTIO_",
        validate_assignment=True,
        extra="ignore",
    )


# Create global settings instance
settings = Settings()


def configure(**overrides) -> Settings:
    """
    Apply runtime overrides (from CLI flags) to the global settings.

    Args:
        **overrides: Setting names and values; None values are ignored

    Returns:
        The updated global settings instance
    """
    for name, value in overrides.items():
        if value is not None:
            setattr(settings, name, value)
    return settings
