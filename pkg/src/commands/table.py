"""
The table command: the full matrix behind the query-complexity table.
"""

from pathlib import Path
from typing import Optional
import click
from src.commands.common import build_config, command_errors, output_options, seed_option, write_report
from src.commands.help_text import COMMAND_HELP, OPTION_HELP
from src.dependencies import get_experiment_service
from src.utils.reporting import emit_table


@click.command(name="table", help=COMMAND_HELP["table"])
@click.option("--k", type=int, default=None, help=OPTION_HELP["k"])
@click.option("--r", type=int, default=None, help=OPTION_HELP["r"])
@click.option("--m", type=int, default=None, help=OPTION_HELP["m"])
@click.option("--size", type=int, default=None, help=OPTION_HELP["size"])
@click.option("--budget", type=int, default=None, help=OPTION_HELP["budget"])
@click.option("--trials", type=int, default=None, help=OPTION_HELP["trials"])
@seed_option
@output_options("csv")
@click.pass_context
def table(
    ctx: click.Context,
    k: Optional[int],
    r: Optional[int],
    m: Optional[int],
    size: Optional[int],
    budget: Optional[int],
    trials: Optional[int],
    seed: Optional[int],
    output_format: str,
    out: Optional[Path],
) -> None:
    with command_errors(ctx):
        config = build_config("table", k=k, r=r, m=m, size=size, budget=budget, trials=trials, seed=seed, format=output_format)
        rows = get_experiment_service().table(config)
    write_report(ctx, emit_table(rows, config.format), out, all(row.passed for row in rows))
