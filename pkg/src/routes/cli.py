"""
Command group wiring every experiment command into one CLI.
"""

from typing import Optional, Sequence
import logging
import click
from config.settings import get_settings
from src.commands import learn, lowerbound, pac, table
from src.commands.common import EXIT_CONFIG, EXIT_FAILURE
from src.commands.help_text import COMMAND_HELP
from src.core.errors import ModularLearningError

logger = logging.getLogger(__name__)


@click.group(help=COMMAND_HELP["cli"])
def cli() -> None:
    pass


cli.add_command(learn.learn)
cli.add_command(lowerbound.lowerbound)
cli.add_command(pac.pac)
cli.add_command(table.table)


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the CLI and return its exit status instead of exiting.

    Args:
        argv: Arguments after the program name; ``sys.argv[1:]`` when omitted

    Returns:
        0 on success, 1 on a bound violation or learning failure, 2 on a configuration error
    """
    try:
        status = cli.main(args=list(argv) if argv is not None else None, prog_name=get_settings().app_name, standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return EXIT_CONFIG
    except click.Abort:
        return EXIT_FAILURE
    except ModularLearningError as e:
        logger.error(f"Unhandled learning error: {e}")
        return EXIT_FAILURE
    except ValueError as e:
        logger.error(f"Invalid arguments: {e}")
        return EXIT_CONFIG
    return status if isinstance(status, int) else 0
