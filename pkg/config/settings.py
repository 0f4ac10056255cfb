"""
Configuration settings manager for the modular concept-learning harness.

Simple environment-based configuration using pydantic-settings.
"""

import logging
import os
from functools import lru_cache
from config.base import BaseConfig


def load_settings() -> BaseConfig:
    """
    Read configuration without caching.

    The configuration is loaded from:
    1. Environment variables (prefix ``MODLEARN_``)
    2. .env file (base configuration)
    3. .env.{environment} file (environment-specific overrides)

    Returns:
        Configuration instance for the current environment
    """
    env = os.getenv("MODLEARN_ENVIRONMENT", "development").lower()
    return BaseConfig(_env_file=[".env", f".env.{env}"], environment=env)


@lru_cache
def get_settings() -> BaseConfig:
    """
    Get the process-wide configuration.

    Returns:
        Cached configuration instance
    """
    return load_settings()


# Create global settings instance
settings = get_settings()


def log_level(config: BaseConfig) -> int:
    """Numeric logging level; debug mode forces DEBUG."""
    if config.debug:
        return logging.DEBUG
    return getattr(logging, config.logging.level.upper(), logging.WARNING)
