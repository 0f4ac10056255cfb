"""
The pac command: seeded PAC trials with exact error measurement.
"""

from pathlib import Path
from typing import Optional
import click
from src.commands.common import build_config, command_errors, output_options, seed_option, write_report
from src.commands.help_text import COMMAND_HELP, OPTION_HELP
from src.dependencies import get_experiment_service
from src.models.experiment import OutputFormat
from src.pac import reports_to_csv
from src.utils.reporting import dump_json


@click.command(name="pac", help=COMMAND_HELP["pac"])
@click.option("--epsilon", type=float, default=None, help=OPTION_HELP["epsilon"])
@click.option("--delta", type=float, default=None, help=OPTION_HELP["delta"])
@click.option("--b", type=float, default=None, help=OPTION_HELP["b"])
@click.option("--trials", type=int, default=None, help=OPTION_HELP["trials"])
@click.option("--size", type=int, default=None, help=OPTION_HELP["size"])
@click.option("--with-mem", is_flag=True, default=False, help=OPTION_HELP["with_mem"])
@seed_option
@output_options("json")
@click.pass_context
def pac(
    ctx: click.Context,
    epsilon: Optional[float],
    delta: Optional[float],
    b: Optional[float],
    trials: Optional[int],
    size: Optional[int],
    with_mem: bool,
    seed: Optional[int],
    output_format: str,
    out: Optional[Path],
) -> None:
    with command_errors(ctx):
        config = build_config(
            "pac", epsilon=epsilon, delta=delta, b=b, trials=trials, size=size, with_mem=with_mem, seed=seed, format=output_format
        )
        reports, summary = get_experiment_service().pac(config)
    if config.format == OutputFormat.CSV:
        text = reports_to_csv(reports)
    else:
        text = dump_json({"summary": summary.model_dump(), "trials": [r.model_dump() for r in reports]})
    write_report(ctx, text, out, summary.passed)
