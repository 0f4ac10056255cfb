"""
The lowerbound command: adversary constructions behind the "only Q" lower bounds.
"""

from pathlib import Path
from typing import Optional
import click
from src.commands.common import build_config, command_errors, output_options, seed_option, write_report
from src.commands.help_text import COMMAND_HELP, OPTION_HELP
from src.dependencies import get_experiment_service
from src.models.experiment import Construction, LearnMode
from src.utils.reporting import dump_json


@click.command(name="lowerbound", help=COMMAND_HELP["lowerbound"])
@click.option("--construction", type=click.Choice([c.value for c in Construction]), default=Construction.PREFIX.value, show_default=True, help=OPTION_HELP["construction"])
@click.option("--mode", type=click.Choice(["mem", "sub", "eq"]), default=None, help=OPTION_HELP["mode"])
@click.option("--k", type=int, default=None, help=OPTION_HELP["k"])
@click.option("--r", type=int, default=None, help=OPTION_HELP["r"])
@click.option("--m", type=int, default=None, help=OPTION_HELP["m"])
@click.option("--size", type=int, default=None, help=OPTION_HELP["size"])
@click.option("--budget", type=int, default=None, help=OPTION_HELP["budget"])
@seed_option
@output_options("json")
@click.pass_context
def lowerbound(
    ctx: click.Context,
    construction: str,
    mode: Optional[str],
    k: Optional[int],
    r: Optional[int],
    m: Optional[int],
    size: Optional[int],
    budget: Optional[int],
    seed: Optional[int],
    output_format: str,
    out: Optional[Path],
) -> None:
    if mode is None:
        mode = LearnMode.MEM.value if construction == Construction.SINGLETON.value else LearnMode.SUB.value
    with command_errors(ctx):
        config = build_config(
            "lowerbound", construction=construction, mode=mode, k=k, r=r, m=m, size=size, budget=budget, seed=seed, format=output_format
        )
        report = get_experiment_service().lowerbound(config)
    write_report(ctx, dump_json(report), out, report["ok"])
