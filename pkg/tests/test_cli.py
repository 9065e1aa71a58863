"""CLI behavior: exit codes, formats, and file handling."""

import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from iasi.cli import main

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture()
def runner():
    return CliRunner()


class TestVerifyCommand:
    def test_expectation_met_exits_zero(self, runner):
        result = runner.invoke(main, [
            "verify", str(FIXTURES / "cycle4.edges"), str(FIXTURES / "cycle4_weakly2.labels"),
            "--expect-weakly", "2",
        ])
        assert result.exit_code == 0
        assert "expect is_weakly_uniform=2: pass" in result.output

    def test_expectation_mismatch_exits_one(self, runner):
        result = runner.invoke(main, [
            "verify", str(FIXTURES / "cycle4.edges"), str(FIXTURES / "cycle4_weakly2.labels"),
            "--expect-uniform", "3",
        ])
        assert result.exit_code == 1
        assert "expect uniform_k=3: fail" in result.output

    def test_no_expectation_reports_and_exits_zero(self, runner):
        result = runner.invoke(main, [
            "verify", str(FIXTURES / "cycle4.edges"), str(FIXTURES / "cycle4_weakly2.labels"),
        ])
        assert result.exit_code == 0
        assert "uniform_k: 2" in result.output

    def test_malformed_labeling_exits_two_with_line(self, runner):
        result = runner.invoke(main, [
            "verify", str(FIXTURES / "k2.edges"), str(FIXTURES / "malformed.labels"),
        ])
        assert result.exit_code == 2
        assert "line 2" in result.stderr

    def test_malformed_graph_exits_two_with_line(self, runner):
        result = runner.invoke(main, [
            "verify", str(FIXTURES / "malformed.edges"), str(FIXTURES / "cycle4_weakly2.labels"),
        ])
        assert result.exit_code == 2
        assert "line 2" in result.stderr

    def test_missing_file_exits_two(self, runner):
        result = runner.invoke(main, [
            "verify", "no_such_file.edges", str(FIXTURES / "cycle4_weakly2.labels"),
        ])
        assert result.exit_code == 2

    def test_json_lines_records(self, runner):
        result = runner.invoke(main, [
            "verify", str(FIXTURES / "cycle4.edges"), str(FIXTURES / "cycle4_weakly2.labels"),
            "--expect-weakly", "2", "--format", "json-lines",
        ])
        assert result.exit_code == 0
        records = [json.loads(line) for line in result.output.splitlines()]
        assert records[0]["type"] == "report"
        assert records[0]["uniform_k"] == 2
        assert records[-1] == {"type": "expect", "field": "is_weakly_uniform", "k": 2, "met": True}


class TestConstructCommand:
    def test_output_is_a_parseable_labeling(self, runner, tmp_path):
        result = runner.invoke(main, ["construct", "weakly", "--family", "cycle:6", "--k", "3"])
        assert result.exit_code == 0
        labeling_file = tmp_path / "out.labels"
        labeling_file.write_text(result.output)
        graph_file = tmp_path / "g.edges"
        from iasi.graphs import cycle, render_edge_list

        graph_file.write_text(render_edge_list(cycle(6)))
        check = runner.invoke(main, [
            "verify", str(graph_file), str(labeling_file), "--expect-weakly", "3",
        ])
        assert check.exit_code == 0

    def test_infeasible_prints_certificate_and_exits_one(self, runner):
        result = runner.invoke(main, ["construct", "weakly", "--family", "cycle:5", "--k", "2"])
        assert result.exit_code == 1
        assert "odd_cycle: 0 1 2 3 4" in result.output

    def test_even_k_in_odd_mode_exits_two(self, runner):
        result = runner.invoke(main, ["construct", "odd", "--family", "complete:4", "--k", "4"])
        assert result.exit_code == 2

    def test_graph_file_source(self, runner):
        result = runner.invoke(main, ["construct", "odd", str(FIXTURES / "triangle.edges"), "--k", "3"])
        assert result.exit_code == 0
        assert result.output.count("\n") == 3

    def test_requires_exactly_one_graph_source(self, runner):
        both = runner.invoke(main, [
            "construct", "odd", str(FIXTURES / "triangle.edges"), "--family", "cycle:3", "--k", "3",
        ])
        assert both.exit_code == 2
        neither = runner.invoke(main, ["construct", "odd", "--k", "3"])
        assert neither.exit_code == 2

    def test_tree_family(self, runner):
        result = runner.invoke(main, [
            "construct", "weakly", "--family", "tree:-,0,0,1,1", "--k", "4",
        ])
        assert result.exit_code == 0

    def test_bipartite_overrides(self, runner):
        result = runner.invoke(main, [
            "construct", "bipartite", "--family", "path:6", "--m", "3", "--n", "3", "--d", "2",
        ])
        assert result.exit_code == 0

    def test_json_lines(self, runner):
        result = runner.invoke(main, [
            "construct", "weakly", "--family", "cycle:4", "--k", "2", "--format", "json-lines",
        ])
        records = [json.loads(line) for line in result.output.splitlines()]
        assert records[0] == {"type": "vertex", "vertex": 0, "label": [1]}
        assert len(records) == 4


class TestDecideCommand:
    @pytest.mark.parametrize(
        "family,k,flags,code,needle",
        [
            ("cycle:7", "2", [], 1, "rule: nonbipartite_even_k"),
            ("cycle:7", "7", [], 0, "rule: k_odd"),
            ("cycle:8", "2", [], 0, "rule: bipartite_any_k"),
            ("complete:4", "3", ["--weakly"], 1, "rule: weakly_nonbipartite"),
            ("complete:4", "1", ["--weakly"], 0, "rule: weakly_k1_always"),
        ],
    )
    def test_rules_and_exit_codes(self, runner, family, k, flags, code, needle):
        result = runner.invoke(main, ["decide", "--family", family, "--k", k, *flags])
        assert result.exit_code == code
        assert needle in result.output


class TestSearchCommand:
    def test_found_prints_labeling(self, runner):
        result = runner.invoke(main, [
            "search", str(FIXTURES / "k2.edges"), "--mode", "uniform", "--k", "1", "--universe", "2",
        ])
        assert result.exit_code == 0
        assert result.output == "0: {0}\n1: {1}\n"

    def test_exhausted_exits_one(self, runner):
        result = runner.invoke(main, [
            "search", "--family", "cycle:3", "--mode", "weakly", "--k", "2", "--universe", "9",
        ])
        assert result.exit_code == 1
        assert result.output == "exhausted\n"

    def test_small_universe_pigeonhole(self, runner):
        # only three 1..3-element admissible labels exist over {0..2} for
        # four mutually adjacent vertices needing 3-element edge sets
        result = runner.invoke(main, [
            "search", "--family", "complete:4", "--mode", "uniform", "--k", "3", "--universe", "2",
        ])
        assert result.exit_code == 1
        assert "exhausted" in result.output

    def test_aborted_exits_three(self, runner):
        result = runner.invoke(main, [
            "search", "--family", "cycle:5", "--mode", "weakly", "--k", "2",
            "--universe", "9", "--budget", "10",
        ])
        assert result.exit_code == 3
        assert result.output == "aborted\n"

    def test_all_collects_multiple(self, runner):
        result = runner.invoke(main, [
            "search", str(FIXTURES / "k2.edges"), "--mode", "uniform", "--k", "1",
            "--universe", "2", "--max-size", "1", "--all", "10",
        ])
        assert result.exit_code == 0
        blocks = result.output.strip().split("\n\n")
        assert len(blocks) == 6

    def test_json_lines_status_record(self, runner):
        result = runner.invoke(main, [
            "search", "--family", "cycle:3", "--mode", "weakly", "--k", "2",
            "--universe", "9", "--format", "json-lines",
        ])
        records = [json.loads(line) for line in result.output.splitlines()]
        assert records[-1]["status"] == "exhausted"
        assert records[-1]["count"] == 0
        assert records[-1]["steps"] > 0
