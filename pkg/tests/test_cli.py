"""Tests related to the command-line interface."""

import json

from click.testing import CliRunner
import pytest
from covering_polynomials.cli import Command, cli
from covering_polynomials.root_system import RootSystemType


def json_lines(output: str) -> list[dict]:
    return [json.loads(line) for line in output.splitlines() if line.startswith("{")]


@pytest.fixture(scope="module")
def runner():
    yield CliRunner()


def invoke(runner: CliRunner, *args: str):
    return runner.invoke(cli, ["--override", "progress_bars=false", *args])


class TestCommand:
    def test_type_and_poset_are_exclusive(self, tmp_path) -> None:
        with pytest.raises(ValueError):
            Command(
                verb="polynomial",
                root_type=RootSystemType("A", 2),
                poset_path=tmp_path / "poset.txt",
                object="custom",
            )

    def test_custom_needs_poset(self) -> None:
        with pytest.raises(ValueError):
            Command(
                verb="polynomial",
                root_type=RootSystemType("A", 2),
                poset_path=None,
                object="custom",
            )

    def test_abelian_ideals_of_bc(self) -> None:
        with pytest.raises(ValueError):
            Command(
                verb="polynomial",
                root_type=RootSystemType("BC", 2),
                poset_path=None,
                object="ab",
            )

    def test_selected(self) -> None:
        command = Command(
            verb="polynomial",
            root_type=RootSystemType("A", 2),
            poset_path=None,
            object="ad",
            which="lower",
        )
        assert [which.value for which in command.selected] == ["lower"]


class TestPolynomial:
    def test_e6_json(self, runner) -> None:
        result = invoke(runner, "polynomial", "--type", "E6", "--format", "json")
        assert result.exit_code == 0, result.output
        (row,) = json_lines(result.output)
        assert row["type"] == "E6"
        assert row["upper"] == [6, 5, 20, 5]
        assert row["lower"] == [1, 15, 15, 5]
        assert row["deviation"] == [5]
        assert row["total"] == 36
        assert row["edges"] == 60

    def test_abelian_ideals_of_a1(self, runner) -> None:
        result = invoke(
            runner,
            "polynomial",
            "--type",
            "A1",
            "--object",
            "ab",
            "--which",
            "upper",
            "--format",
            "json",
        )
        assert result.exit_code == 0, result.output
        (row,) = json_lines(result.output)
        assert row["upper"] == [1, 1]
        assert "lower" not in row

    def test_text(self, runner) -> None:
        result = invoke(runner, "polynomial", "--type", "A2", "--object", "ad")
        assert result.exit_code == 0, result.output
        assert "upper: 1 + 3q + q^2" in result.output
        assert "total: 5" in result.output

    def test_abelian_ideals_of_bc(self, runner) -> None:
        result = invoke(runner, "polynomial", "--type", "BC2", "--object", "ab")
        assert result.exit_code == 2

    def test_invalid_type(self, runner) -> None:
        result = invoke(runner, "polynomial", "--type", "D2")
        assert result.exit_code == 2

    def test_custom_poset(self, runner, tmp_path) -> None:
        path = tmp_path / "wedge.poset"
        path.write_text("poset 3\n0 1\n0 2\n")
        result = invoke(runner, "polynomial", "--poset", str(path), "--format", "json")
        assert result.exit_code == 0, result.output
        (row,) = json_lines(result.output)
        assert row["object"] == "custom"
        assert row["upper"] == [1, 2]
        assert row["lower"] == [2, 0, 1]
        assert row["deviation"] == [-1]


class TestEnumerate:
    @pytest.mark.parametrize(
        "root_type, object_name, expected",
        [("A2", "ab", 4), ("G2", "ad", 8), ("BC2", "ad", 10), ("F4", "ad0", 66)],
    )
    def test_counts(self, runner, root_type, object_name, expected) -> None:
        result = invoke(
            runner,
            "enumerate",
            "--type",
            root_type,
            "--object",
            object_name,
            "--format",
            "json",
        )
        assert result.exit_code == 0, result.output
        assert len(json_lines(result.output)) == expected

    def test_abelian_records(self, runner) -> None:
        result = invoke(
            runner, "enumerate", "--type", "A2", "--object", "ab", "--format", "json"
        )
        records = json_lines(result.output)
        assert records[0]["roots"] == []
        assert records[0]["tau"] is None
        assert records[1]["roots"] == [[1, 1]]
        assert records[1]["shift"] == [-1, 1, 1]
        assert records[1]["tau"] == [1, 1]
        assert [record["kappa"] for record in records] == [0, 1, 1, 1]
        assert [record["iota"] for record in records] == [1, 2, 0, 0]

    def test_text(self, runner) -> None:
        result = invoke(runner, "enumerate", "--type", "A1", "--object", "ad")
        assert result.exit_code == 0, result.output
        assert "{} kappa=0 iota=1" in result.output
        assert "{(1)} kappa=1 iota=0" in result.output

    def test_ad0_of_rank_one(self, runner) -> None:
        result = invoke(runner, "enumerate", "--type", "A1", "--object", "ad0")
        assert result.exit_code == 2

    def test_budget_exceeded(self, runner) -> None:
        result = invoke(
            runner,
            "--override",
            "ideal_budget=10",
            "enumerate",
            "--type",
            "A3",
            "--object",
            "ad",
        )
        assert result.exit_code == 1
        assert "budget" in result.output


class TestReport:
    def test_table1_latex(self, runner) -> None:
        result = invoke(
            runner, "report", "table1", "--max-rank", "2", "--format", "latex"
        )
        assert result.exit_code == 0, result.output
        assert r"\begin{tabular}{llll}" in result.output
        header = r"Type & $K^\uparrow$ & $K^\downarrow$ & $\Delta$ \\ \hline"
        assert header in result.output
        assert r"G2 & $2+3q+q^{2}$ & $1+5q$ & $1$ \\" in result.output

    def test_table3_speculative(self, runner) -> None:
        result = invoke(
            runner, "report", "table3", "--format", "json", "--speculative"
        )
        assert result.exit_code == 0, result.output
        rows = json_lines(result.output)
        assert rows[-1]["type"] == "E9"
        assert rows[-1]["lower"] is None

    def test_delta_at_one(self, runner) -> None:
        result = invoke(
            runner, "report", "delta-at-one", "--max-rank", "8", "--format", "json"
        )
        values = {row["type"]: row["value"] for row in json_lines(result.output)}
        assert values["E8"] == 26
        assert values["C3"] == 0


def test_help_lists_exit_codes(runner) -> None:
    result = runner.invoke(cli, ["--help"])
    assert result.exit_code == 0
    assert "Exit codes:" in result.output
    assert "ideal_budget" in result.output


def test_verify(runner) -> None:
    result = invoke(runner, "verify", "table1", "--max-rank", "2")
    assert result.exit_code == 0, result.output
    assert "0 failed" in result.output
