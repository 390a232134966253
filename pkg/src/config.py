"""
Configuration management for Unitary Cayley.

Uses pydantic-settings for type-safe configuration from environment variables
(prefix ``UCG_``) or an optional ``.env`` file. Nothing is required: every
guard and tolerance has a desk-scale default.
"""

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="UCG_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # =========================================================================
    # Application
    # =========================================================================
    environment: str = Field(default="development", description="development|staging|production")
    debug: bool = Field(default=False, description="Colourful console logs instead of JSON")
    log_level: str = Field(default="INFO", description="Logging level")

    api_host: str = Field(default="127.0.0.1")
    api_port: int = Field(default=8000)

    # =========================================================================
    # Desk-scale guards
    # =========================================================================
    closed_form_max_n: int = Field(default=10**6, description="Ceiling for closed-form commands")
    oracle_charpoly_max_n: int = Field(default=256)
    oracle_det_max_n: int = Field(default=1024)
    wl_max_n: int = Field(default=128)
    power_check_max_n: int = Field(default=64)
    span_max_n: int = Field(default=256)
    check_max_n: int = Field(default=128, description="Oracle-backed `check` properties")

    # =========================================================================
    # Verification sweep
    # =========================================================================
    sweep_default_max_n: int = Field(default=64, description="Default `verify` ceiling")
    sweep_hard_max_n: int = Field(default=256, description="Absolute `--max-n` ceiling")
    report_path: str = Field(default="verification_report.json")

    # =========================================================================
    # Ramanujan-sum oracle
    # =========================================================================
    ramanujan_tolerance: float = Field(default=1e-6)
    ramanujan_direct_max_n: int = Field(default=10**6)

    # =========================================================================
    # Validators
    # =========================================================================
    @field_validator("environment")
    @classmethod
    def validate_environment(cls, v: str) -> str:
        """Validate environment value."""
        valid = ["development", "staging", "production"]
        if v not in valid:
            raise ValueError(f"environment must be one of: {valid}")
        return v

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Validate log level."""
        valid = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        if v.upper() not in valid:
            raise ValueError(f"log_level must be one of: {valid}")
        return v.upper()

    @field_validator(
        "closed_form_max_n",
        "oracle_charpoly_max_n",
        "oracle_det_max_n",
        "wl_max_n",
        "power_check_max_n",
        "span_max_n",
        "check_max_n",
        "sweep_default_max_n",
        "sweep_hard_max_n",
        "ramanujan_direct_max_n",
    )
    @classmethod
    def validate_guard(cls, v: int) -> int:
        """Guards are positive vertex counts."""
        if v < 1:
            raise ValueError("guard must be a positive integer")
        return v

    @field_validator("ramanujan_tolerance")
    @classmethod
    def validate_tolerance(cls, v: float) -> float:
        """Rounding tolerance must leave room to identify the nearest integer."""
        if not 0.0 < v < 0.5:
            raise ValueError("ramanujan_tolerance must lie in (0, 0.5)")
        return v

    @property
    def is_production(self) -> bool:
        """Check if running in production."""
        return self.environment == "production"

    @property
    def is_development(self) -> bool:
        """Check if running in development."""
        return self.environment == "development"


# Global settings instance
settings = Settings()
