"""
Simple dependency injection for the experiment commands.
"""

from functools import lru_cache
from src.learners.factory import SublearnerFactory
from src.services.experiment_service import ExperimentService
from config.settings import get_settings


@lru_cache
def get_experiment_service() -> ExperimentService:
    """
    Get experiment service instance.

    Returns:
        ExperimentService with the reference sublearners and the configured budget
    """
    settings = get_settings()
    return ExperimentService(
        factory=SublearnerFactory(),
        budget=settings.session.budget,
        prefix_max_len=settings.universe.prefix_max_len,
    )
