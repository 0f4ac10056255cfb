"""
Base configuration module for the modular concept-learning harness.
"""

from typing import Optional
from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class UniverseConfig(BaseModel):
    """Bounded-universe parameters shared by every concept class."""

    default_size: int = Field(default=16, ge=2, description="Truncated universe size U")
    prefix_max_len: int = Field(
        default=4, ge=0, description="Longest prefix string enumerated by the prefix class"
    )
    singleton_max: int = Field(default=2, ge=1, description="Largest singleton value m")


class SessionConfig(BaseModel):
    """Learner/oracle session settings."""

    budget: int = Field(default=1_000_000, gt=0, description="Query budget per session")


class PacConfig(BaseModel):
    """PAC experiment settings."""

    b: float = Field(default=4.0, gt=0, description="Sample-complexity constant")
    epsilon: float = Field(default=0.2, gt=0, lt=1, description="Accuracy parameter")
    delta: float = Field(default=0.2, gt=0, lt=1, description="Confidence parameter")
    grid: int = Field(default=16, ge=2, description="Side of the uniform grid")
    trials: int = Field(default=200, ge=1, description="Seeded trials per run")


class ExperimentSettings(BaseModel):
    """Defaults for the table and lower-bound commands."""

    trials: int = Field(default=20, ge=1, description="Random targets per table cell")
    k: int = Field(default=2, ge=1, description="Number of component classes")
    r: int = Field(default=2, ge=0, description="String-length sum for the prefix construction")


class LoggingConfig(BaseModel):
    """Logging configuration."""

    level: str = Field(default="warning", description="Logging level")
    format: str = Field(
        default="%(asctime)s %(levelname)s %(name)s: %(message)s",
        description="Log record format",
    )


class BaseConfig(BaseSettings):
    """Base configuration class using pydantic-settings for environment variable loading."""

    model_config = SettingsConfigDict(
        env_prefix="MODLEARN_",
        env_file=".env",
        env_file_encoding="utf-8",
        env_nested_delimiter="__",
        case_sensitive=False,
        validate_default=True,
        extra="ignore",
    )

    # Application settings
    app_name: str = Field(default="modlearn", description="Application name")
    debug: bool = Field(default=False, description="Debug mode")
    environment: str = Field(default="development", description="Environment name")
    seed: Optional[int] = Field(
        default=None, description="Overrides --seed for every command when set"
    )

    # Component configurations
    universe: UniverseConfig = Field(default_factory=lambda: UniverseConfig())
    session: SessionConfig = Field(default_factory=lambda: SessionConfig())
    pac: PacConfig = Field(default_factory=lambda: PacConfig())
    experiment: ExperimentSettings = Field(default_factory=lambda: ExperimentSettings())
    logging: LoggingConfig = Field(default_factory=lambda: LoggingConfig())
