"""
Tests for the modlearn command line and report rendering.
"""

import csv
import io
import json
import logging
import pytest
from click.testing import CliRunner
from config.base import BaseConfig
from config.settings import log_level
from src.commands import learn as learn_command
from src.concepts import PrefixClass
from src.learners import SublearnerFactory
from src.models.experiment import ComplexityRow, OutputFormat
from src.models.queries import QueryKind, QueryStats
from src.routes.cli import cli, run_cli
from src.services.experiment_service import ExperimentService
from src.utils.concept_syntax import parse_class
from src.utils.reporting import dump_json, emit_table

RECTANGLES = "prod(intervals(16),intervals(16))"


@pytest.fixture
def runner():
    return CliRunner()


def test_learn_sup_rectangle(runner):
    result = runner.invoke(cli, ["learn", "--class", RECTANGLES, "--target", "prod([3,5],[2,8])", "--mode", "sup"])
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert report["exact"] is True
    assert report["hypothesis"] == "prod([3,5],[2,8])"
    assert set(report["counts"]) == {"Sup"}
    assert len(report["transcript"]) == report["total"]


def test_learn_prefix_transcript(runner):
    result = runner.invoke(cli, ["learn", "--class", "prefix(8,3)", "--target", 'c("12")', "--mode", "eq"])
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert report["counts"] == {"EQ": 3}
    assert report["transcript"][1] == '1 EQ c("1") -> CE ("1",2)'


def test_learn_with_given_positive(runner):
    result = runner.invoke(
        cli,
        ["learn", "--class", RECTANGLES, "--target", "prod([3,5],[2,8])", "--mode", "eq+mem+1pos", "--positive", "(4,2)"],
    )
    assert result.exit_code == 0, result.output
    assert "1Pos" not in json.loads(result.output)["counts"]


def test_learn_writes_to_a_file(runner, tmp_path):
    out = tmp_path / "report.json"
    result = runner.invoke(
        cli, ["learn", "--class", "singletons(4)", "--target", "{3}", "--mode", "mem", "--out", str(out)]
    )
    assert result.exit_code == 0, result.output
    assert result.output == ""
    assert json.loads(out.read_text(encoding="utf-8"))["hypothesis"] == "{3}"


@pytest.mark.parametrize(
    "args",
    [
        ["--class", "intervals(", "--target", "[1,2]"],
        ["--class", "intervals(4)", "--target", "[1,9]"],
        ["--class", "intervals(4)", "--target", "[1,2]", "--mode", "mem+1pos"],
        ["--class", "intervals(4)", "--target", "[1,2]", "--budget", "0"],
    ],
)
def test_learn_configuration_errors_exit_2(runner, args):
    result = runner.invoke(cli, ["learn", *args])
    assert result.exit_code == 2


def test_learn_false_positive_exits_1(runner):
    result = runner.invoke(
        cli,
        ["learn", "--class", RECTANGLES, "--target", "prod([3,5],[2,8])", "--mode", "mem+1pos", "--positive", "(0,0)"],
    )
    assert result.exit_code == 1


def test_learn_budget_exhaustion_exits_1(runner):
    result = runner.invoke(cli, ["learn", "--class", "singletons(9)", "--target", "{9}", "--mode", "mem", "--budget", "3"])
    assert result.exit_code == 1


def test_lowerbound_prefix(runner):
    result = runner.invoke(cli, ["lowerbound", "--construction", "prefix", "--k", "2", "--r", "2"])
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert report["justifiable"] == 4
    assert report["certificate"] is not None


def test_lowerbound_singleton(runner):
    result = runner.invoke(cli, ["lowerbound", "--construction", "singleton", "--m", "2", "--k", "2"])
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert report["queries"] == 8
    assert report["mode"] == "Mem"


def test_lowerbound_pos(runner):
    result = runner.invoke(cli, ["lowerbound", "--construction", "pos"])
    assert result.exit_code == 0, result.output
    assert json.loads(result.output)["consistent"] == 2


def test_pac_csv(runner):
    result = runner.invoke(cli, ["pac", "--trials", "20", "--seed", "0", "--format", "csv"])
    assert result.exit_code == 0, result.output
    lines = result.output.splitlines()
    assert lines[0] == "seed,m,epsilon,delta,error,nodes,mem_queries"
    assert len(lines) == 21


def test_pac_json_summary(runner):
    result = runner.invoke(cli, ["pac", "--trials", "10", "--with-mem"])
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert report["summary"]["trials"] == 10
    assert all(trial["mem_queries"] >= 0 for trial in report["trials"])


def test_pac_rejects_out_of_range_parameters(runner):
    assert runner.invoke(cli, ["pac", "--epsilon", "1.5"]).exit_code == 2


def test_table_rows_all_pass(runner):
    result = runner.invoke(cli, ["table", "--k", "2", "--seed", "7", "--trials", "3"])
    assert result.exit_code == 0, result.output
    assert result.output.splitlines()[0] == "mode,query_set,relation,measured,observed,bound,pass,note"
    rows = list(csv.DictReader(io.StringIO(result.output)))
    assert all(row["pass"] == "true" for row in rows)
    assert rows[0]["bound"] == "not possible"


def test_table_is_deterministic_per_seed(runner):
    args = ["table", "--k", "2", "--trials", "2", "--format", "json"]
    first = runner.invoke(cli, [*args, "--seed", "7"])
    second = runner.invoke(cli, [*args, "--seed", "7"])
    assert first.exit_code == 0
    assert first.output == second.output


def test_seed_setting_overrides_the_flag(runner):
    args = ["table", "--k", "2", "--trials", "2", "--format", "json"]
    expected = runner.invoke(cli, [*args, "--seed", "7"]).output
    overridden = runner.invoke(cli, [*args, "--seed", "1"], env={"MODLEARN_SEED": "7"})
    assert overridden.exit_code == 0
    assert overridden.output == expected


def test_run_cli_returns_exit_codes(capsys):
    assert run_cli(["learn", "--class", "singletons(4)", "--target", "{2}", "--mode", "sub"]) == 0
    assert json.loads(capsys.readouterr().out)["exact"] is True
    assert run_cli(["learn", "--class", "bogus(", "--target", "{2}"]) == 2
    assert run_cli(["learn", "--target", "{2}"]) == 2


def test_emit_table_csv():
    rows = [
        ComplexityRow(
            mode="Sup",
            query_set="only Q",
            measured=QueryStats(counts={QueryKind.SUP: 3}, total=3),
            observed={"Sup": 3},
            bounds={"Sup": 8},
        ),
        ComplexityRow(
            mode="Pos",
            query_set="only Q",
            relation="impossible",
            observed={"consistent": 2},
            bounds={"consistent": 2},
            note="not possible",
        ),
    ]
    lines = emit_table(rows).splitlines()
    assert lines[1] == "Sup,only Q,upper,Sup=3,Sup=3,Sup<=8,true,"
    assert lines[2] == "Pos,only Q,impossible,,consistent=2,not possible,true,not possible"


def test_emit_table_json_and_errors():
    row = ComplexityRow(mode="Mem", query_set="Q + 1Pos", observed={"Mem": 9}, bounds={"Mem": 8})
    assert json.loads(emit_table([row], OutputFormat.JSON))[0]["passed"] is False
    with pytest.raises(ValueError):
        emit_table([])


def test_dump_json_is_sorted():
    assert dump_json({"b": 1, "a": 2}) == '{\n  "a": 2,\n  "b": 1\n}\n'


@pytest.mark.parametrize(
    "args, code",
    [
        (["lowerbound", "--construction", "singleton", "--m", "2", "--k", "2", "--budget", "3"], 1),
        (["lowerbound", "--construction", "singleton", "--budget", "0"], 2),
        (["table", "--k", "2", "--trials", "2", "--budget", "1"], 1),
        (["table", "--budget", "-5"], 2),
    ],
)
def test_budget_option_on_lowerbound_and_table(runner, args, code):
    assert runner.invoke(cli, args).exit_code == code


class RejectingService:
    def learn(self, config):
        raise ValueError("elimination learner does not pose Sup queries")


def test_value_errors_exit_2(runner, monkeypatch):
    monkeypatch.setattr(learn_command, "get_experiment_service", lambda: RejectingService())
    result = runner.invoke(cli, ["learn", "--class", "singletons(2)", "--target", "{1}"])
    assert result.exit_code == 2
    assert "does not pose Sup" in result.output
    assert run_cli(["learn", "--class", "singletons(2)", "--target", "{1}"]) == 2


def test_prefix_max_len_fills_in_short_prefix_specs():
    assert parse_class("prefix(8)", prefix_max_len=3) == parse_class("prefix(8,3)")
    service = ExperimentService(factory=SublearnerFactory(), budget=1_000, prefix_max_len=2)
    concept_class, target = service.resolve("prefix(8)", 'c("12")')
    assert isinstance(concept_class, PrefixClass)
    assert concept_class.max_len == 2
    assert concept_class.is_concept(target)


def test_learn_accepts_a_short_prefix_spec(runner):
    result = runner.invoke(cli, ["learn", "--class", "prefix(8)", "--target", 'c("12")', "--mode", "eq"])
    assert result.exit_code == 0, result.output
    assert json.loads(result.output)["counts"] == {"EQ": 3}


def test_debug_mode_forces_debug_logging():
    assert log_level(BaseConfig(debug=True)) == logging.DEBUG
    assert log_level(BaseConfig(logging={"level": "info"})) == logging.INFO
    assert log_level(BaseConfig(logging={"level": "nonsense"})) == logging.WARNING


def test_usage_names_the_configured_program(capsys):
    assert run_cli(["--help"]) == 0
    assert capsys.readouterr().out.startswith("Usage: modlearn ")
