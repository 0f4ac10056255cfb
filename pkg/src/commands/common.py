"""
Shared plumbing for the experiment commands: config resolution, errors and output.
"""

from contextlib import contextmanager
from pathlib import Path
from typing import Any, Callable, Iterator, Optional
import logging
import click
from pydantic import ValidationError
from config.settings import load_settings
from src.commands.help_text import OPTION_HELP
from src.core.errors import ConfigError, ModularLearningError
from src.models.experiment import ExperimentConfig

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIG = 2


def seed_option(f: Callable) -> Callable:
    return click.option("--seed", type=int, default=None, help=OPTION_HELP["seed"])(f)


def output_options(default_format: str) -> Callable:
    def decorate(f: Callable) -> Callable:
        f = click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None, help=OPTION_HELP["out"])(f)
        return click.option(
            "--format", "output_format", type=click.Choice(["json", "csv"]), default=default_format, show_default=True, help=OPTION_HELP["format"]
        )(f)

    return decorate


def build_config(command: str, **values: Any) -> ExperimentConfig:
    """
    Resolve command-line values against settings into an ExperimentConfig.

    Unset values take the settings defaults; ``MODLEARN_SEED`` wins over ``--seed``.

    Raises:
        ConfigError: If settings or flag values fail validation
    """
    try:
        settings = load_settings()
    except ValidationError as e:
        raise ConfigError(f"invalid settings: {e}") from e

    defaults = {
        "k": settings.experiment.k,
        "r": settings.experiment.r,
        "m": settings.universe.singleton_max,
        "size": settings.universe.default_size,
        "budget": settings.session.budget,
        "trials": settings.experiment.trials,
        "epsilon": settings.pac.epsilon,
        "delta": settings.pac.delta,
        "b": settings.pac.b,
        "seed": 0,
    }
    if command == "pac":
        defaults.update(trials=settings.pac.trials, size=settings.pac.grid)
    resolved = {**defaults, **{key: value for key, value in values.items() if value is not None}}
    if settings.seed is not None:
        resolved["seed"] = settings.seed
    try:
        return ExperimentConfig(command=command, **resolved)
    except ValidationError as e:
        raise ConfigError(f"invalid {command} options: {e}") from e


@contextmanager
def command_errors(ctx: click.Context) -> Iterator[None]:
    """Map errors to exit codes: 2 for configuration errors and invalid arguments, 1 for learning failures."""
    try:
        yield
    except ConfigError as e:
        logger.error(f"Configuration error: {e}")
        click.echo(f"Error: {e}", err=True)
        ctx.exit(EXIT_CONFIG)
    except ModularLearningError as e:
        logger.error(f"{ctx.info_name} failed: {e}")
        click.echo(f"Error: {e.__class__.__name__}: {e}", err=True)
        ctx.exit(EXIT_FAILURE)
    except ValueError as e:
        logger.error(f"Invalid arguments to {ctx.info_name}: {e}")
        click.echo(f"Error: {e}", err=True)
        ctx.exit(EXIT_CONFIG)


def write_report(ctx: click.Context, text: str, out: Optional[Path], ok: bool) -> None:
    """Write ``text`` to ``out`` or standard output, then exit 1 unless ``ok``."""
    if out is None:
        click.echo(text, nl=False)
    else:
        out.write_text(text, encoding="utf-8")
        logger.info(f"Report written to {out}")
    ctx.exit(EXIT_OK if ok else EXIT_FAILURE)
