#
# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.
#
import json
import os
import sys
from unittest import mock

import pytest

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))
from ore_thompson import cli  # noqa
from ore_thompson.constant import SIZE_BUDGET_ENV  # noqa
from ore_thompson.verification import SUITES  # noqa
from support import DATA_DIR, get_args  # noqa

TRANSPOSITION = "V[F(1;1) | Sym2[2, 1] | F(1;1)]"


@pytest.fixture(autouse=True)
def no_budget_override(monkeypatch):
    monkeypatch.delenv(SIZE_BUDGET_ENV, raising=False)


def report_from(capsys):
    return json.loads(capsys.readouterr().out)


def test_parser_reads_subcommands():
    parser = cli._parser()
    args = parser.parse_args(["verify", "figure-five", "--family", "T", "--bound", "3"])
    assert args.cmd == "verify"
    assert args.suite == "figure-five"
    assert args.family == "T"
    assert args.bound == 3
    args = parser.parse_args(["-c", "ore.yml", "group", "mul", "--in", "a.json", "b.json"])
    assert args.config_file == "ore.yml"
    assert args.action == "mul"
    assert args.inputs == ["a.json", "b.json"]
    args = parser.parse_args(["homology", "--graph", "K", "--n", "7", "--max-dim", "1"])
    assert args.max_dim == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["group", "divide"],
        ["verify", "no-such-suite"],
        ["group", "mul", "--family", "Q"],
        [],
    ],
)
def test_parser_rejects(argv):
    with pytest.raises(SystemExit):
        cli._parser().parse_args(argv)


def test_main_uses_default_config_path():
    args = get_args("verify", suite="figure-five")
    args.config_file = None
    with mock.patch("ore_thompson.cli.run", return_value=0) as run:
        assert cli.main(args) == 0
    assert run.call_args[0][0].config_file.endswith(os.path.join(".local", "config", "ore.yml"))


def test_group_eq(capsys):
    args = get_args("group", action="eq", inputs=[TRANSPOSITION, TRANSPOSITION])
    assert cli.run(args) == 0
    report = report_from(capsys)
    assert report["command"] == "group eq"
    assert report["result"] == {"equal": True}


def test_group_order(capsys):
    args = get_args("group", action="order", inputs=["T[F(1;1,1) | rot(1 mod 3) | F(1;1,1)]"])
    assert cli.run(args) == 0
    assert report_from(capsys)["result"] == {"order": 3, "bound": 64}


def test_group_mul_writes_report_file(tmp_path):
    out = tmp_path / "report.json"
    args = get_args("group", action="mul", inputs=[TRANSPOSITION, TRANSPOSITION], out=str(out))
    assert cli.run(args) == 0
    report = json.loads(out.read_text())
    assert report["result"]["text"].startswith("V[")
    assert report["records"] == []


def test_malformed_input_exits_with_usage_error(capsys):
    args = get_args("group", action="eq", inputs=["V[not an element]", TRANSPOSITION])
    assert cli.run(args) == 2
    assert capsys.readouterr().err.startswith("ore group:")


def test_missing_inputs_exit_with_usage_error(capsys):
    assert cli.run(get_args("group", action="mul", inputs=[TRANSPOSITION])) == 2
    assert "expected 2 inputs" in capsys.readouterr().err


def test_missing_option_exits_with_usage_error(capsys):
    assert cli.run(get_args("complex", action="matching")) == 2
    assert "--graph" in capsys.readouterr().err


def test_missing_file_exits_with_usage_error(tmp_path):
    args = get_args("forest", action="normal-form", inputs=[str(tmp_path / "missing.json")])
    assert cli.run(args) == 2


def test_forest_reachable(capsys):
    args = get_args("forest", action="reachable", base=1, n=3, arity=3)
    assert cli.run(args) == 0
    assert report_from(capsys)["result"] == {"m": 1, "n": 3, "arity": 3, "reachable": True}


def test_braid_eq(capsys):
    args = get_args("braid", action="eq", inputs=["B3[1, 2, 1]", "B3[2, 1, 2]"])
    assert cli.run(args) == 0
    assert report_from(capsys)["result"] == {"equal": True}


def test_complex_matching(capsys):
    assert cli.run(get_args("complex", action="matching", graph="L", n=4)) == 0
    result = report_from(capsys)["result"]
    assert result["f_vector"] == [3, 1]
    assert result["dimension"] == 1


def test_homology_of_complete_seven(capsys):
    """Test that H_1 of the matching complex of K_7 is Z/3"""
    assert cli.run(get_args("homology", graph="K", n=7, max_dim=1)) == 0
    result = report_from(capsys)["result"]
    assert result["homology"]["1"] == {"betti": 0, "torsion": [3]}
    assert result["connectivity"] == 0


def test_homology_of_complex_file(tmp_path, capsys):
    path = tmp_path / "triangle.json"
    path.write_text(json.dumps({"vertices": ["a", "b", "c"], "facets": [[0, 1], [1, 2], [0, 2]]}))
    assert cli.run(get_args("homology", inputs=[str(path)], max_dim=1)) == 0
    result = report_from(capsys)["result"]
    assert result["homology"]["1"]["betti"] == 1


def test_grounded_certificate(capsys):
    assert cli.run(get_args("grounded", graph="L", n=8)) == 0
    result = report_from(capsys)["result"]
    assert result["flag"] is True
    assert result["bound"] == 1


def test_rewrite_bad_graph_is_a_circle(capsys):
    assert cli.run(get_args("rewrite", action="eh", graph="badgraph1")) == 0
    result = report_from(capsys)["result"]
    assert result["f_vector"] == [4, 4]
    assert result["betti"] == {"0": 0, "1": 1}


def test_rewrite_height_of_shipped_file(capsys):
    args = get_args("rewrite", action="height", graph=os.path.join(DATA_DIR, "basilica.json"))
    assert cli.run(args) == 0
    assert report_from(capsys)["result"] == {"height": 4}


def test_rewrite_unknown_graph_or_rule(capsys):
    assert cli.run(get_args("rewrite", action="height", graph="badgraph0")) == 2
    assert cli.run(get_args("rewrite", action="height", graph="basilica", rule="E3")) == 2


def test_verify_figure_five(capsys):
    assert cli.run(get_args("verify", suite="figure-five")) == 0
    report = report_from(capsys)
    assert report["command"] == "verify figure-five"
    assert report["summary"] == {"total": 3, "passed": 3, "failed": 0}


def test_verify_failing_suite_exits_with_one(capsys):
    """Test that a suite raising an exception is reported as one failed record"""

    def broken_suite(context):
        raise RuntimeError("boom")

    with mock.patch.dict(SUITES, {"figure-five": broken_suite}):
        assert cli.run(get_args("verify", suite="figure-five")) == 1
    report = report_from(capsys)
    assert report["records"][0]["name"] == "figure-five"
    assert report["records"][0]["got"] == "RuntimeError: boom"


@pytest.mark.parametrize(
    "command, action",
    [(command, action) for command, choices in sorted(cli.actions.items()) for action in choices],
)
def test_every_action_is_routed(command, action):
    """Test that each action of the command table parses and has a command class"""
    args = cli._parser().parse_args([command, action])
    assert args.action == action
    assert cli.commands[args.cmd] is not None


def test_command_table_covers_parser():
    assert set(cli.actions) <= set(cli.commands)
    assert set(cli.commands) == {"group", "forest", "braid", "complex", "homology", "grounded", "verify", "rewrite"}
