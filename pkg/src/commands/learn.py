"""
The learn command: one target, one query set, honest oracle.
"""

from pathlib import Path
from typing import Optional
import logging
import click
from src.commands.common import build_config, command_errors, output_options, seed_option, write_report
from src.commands.help_text import COMMAND_HELP, OPTION_HELP
from src.dependencies import get_experiment_service
from src.models.experiment import LearnMode
from src.utils.reporting import dump_json

logger = logging.getLogger(__name__)


@click.command(name="learn", help=COMMAND_HELP["learn"])
@click.option("--class", "class_spec", required=True, help=OPTION_HELP["class"])
@click.option("--target", "target_spec", required=True, help=OPTION_HELP["target"])
@click.option("--mode", type=click.Choice([m.value for m in LearnMode]), default=LearnMode.EQ.value, show_default=True, help=OPTION_HELP["mode"])
@click.option("--positive", default=None, help=OPTION_HELP["positive"])
@click.option("--budget", type=int, default=None, help=OPTION_HELP["budget"])
@seed_option
@output_options("json")
@click.pass_context
def learn(
    ctx: click.Context,
    class_spec: str,
    target_spec: str,
    mode: str,
    positive: Optional[str],
    budget: Optional[int],
    seed: Optional[int],
    output_format: str,
    out: Optional[Path],
) -> None:
    with command_errors(ctx):
        config = build_config(
            "learn", class_spec=class_spec, target_spec=target_spec, mode=mode, positive=positive, budget=budget, seed=seed, format=output_format
        )
        report = get_experiment_service().learn(config)
    write_report(ctx, dump_json(report), out, report["exact"])
