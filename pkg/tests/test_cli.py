import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from app.cli import cli, run
from app.core.config import TOOL_NAME, TOOL_VERSION

DATA = Path(__file__).resolve().parents[1] / "app" / "data"
PATH4 = ["--game", str(DATA / "games/path4.json"), "--profile", str(DATA / "profiles/path4.json")]
TRIANGLE = [
    "--game",
    str(DATA / "games/unit3.json"),
    "--profile",
    str(DATA / "profiles/triangle3.json"),
]
BRACE = ["--game", str(DATA / "games/unit3.json"), "--profile", str(DATA / "profiles/brace3.json")]
CYCLE7 = ["--game", str(DATA / "games/unit7.json"), "--profile", str(DATA / "profiles/cycle7.json")]


@pytest.fixture
def invoke():
    runner = CliRunner()

    def _invoke(*args):
        return runner.invoke(cli, ["--threads", "1", *args])

    return _invoke


def _body(result):
    return json.loads(result.output)


class TestGameCommands:
    def test_costs(self, invoke):
        result = invoke("cost", *PATH4)
        assert result.exit_code == 0
        body = _body(result)
        assert body["success"]
        assert body["data"]["costs"] == [6, 4, 4, 6]
        assert body["data"]["local_diameters"] == [3, 2, 2, 3]
        assert body["meta"]["tool"] == TOOL_NAME
        assert body["meta"]["run_config"]["command"] == "cost"

    def test_single_player_cost(self, invoke):
        data = _body(invoke("cost", *PATH4, "--player", "2"))["data"]
        assert data["cost"] == 4
        assert data["distances"] == [1, 0, 1, 2]

    def test_player_out_of_range(self, invoke):
        result = invoke("cost", *PATH4, "--player", "5")
        assert result.exit_code == 2
        assert _body(result)["code"] == 2

    def test_best_response(self, invoke):
        result = invoke("best-response", *PATH4, "--player", "1")
        assert result.exit_code == 0
        data = _body(result)["data"]
        assert data["strategy"] == [3]
        assert data["cost"] == 5
        assert data["current_cost"] == 6
        assert data["improved"]
        assert data["candidates_examined"] == 3

    def test_candidate_cap(self, invoke):
        result = invoke("--candidate-cap", "1", "best-response", *PATH4, "--player", "1")
        assert result.exit_code == 3
        assert not _body(result)["success"]

    def test_missing_game_file(self, invoke, tmp_path):
        result = invoke(
            "cost", "--game", str(tmp_path / "absent.json"), "--profile", str(tmp_path / "p.json")
        )
        assert result.exit_code == 2

    def test_game_file_not_utf8(self, invoke, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_bytes(b'\xff\xfe{"n": 2}')
        result = invoke("cost", "--game", str(bad), "--profile", str(DATA / "profiles/path4.json"))
        assert result.exit_code == 2
        assert _body(result)["code"] == 2

    def test_budget_mismatch(self, invoke, game_files):
        game_path, profile_path = game_files([1, 1, 1], [[2], [1, 3], [1]])
        result = invoke("cost", "--game", game_path, "--profile", profile_path)
        assert result.exit_code == 2


class TestCheck:
    def test_equilibrium(self, invoke):
        result = invoke("check", *TRIANGLE)
        assert result.exit_code == 0
        assert _body(result)["message"] == "exact check passed"

    def test_witness(self, invoke):
        result = invoke("check", *BRACE)
        assert result.exit_code == 4
        body = _body(result)
        assert body["code"] == 4
        assert body["data"]["witness"] == {
            "player": 2,
            "strategy": [3],
            "old_cost": 3,
            "new_cost": 2,
        }

    def test_sufficient_never_fails(self, invoke):
        result = invoke("check", *BRACE, "--mode", "sufficient")
        assert result.exit_code == 0
        assert _body(result)["data"]["verdict"] == "inconclusive"

    def test_swap_mode(self, invoke):
        assert invoke("check", *PATH4, "--mode", "swap").exit_code == 4

    def test_unknown_mode(self, invoke):
        assert invoke("check", *TRIANGLE, "--mode", "loose").exit_code == 2


class TestDynamics:
    def test_trace_file(self, invoke, tmp_path):
        trace = tmp_path / "trace.jsonl"
        result = invoke("dynamics", *PATH4, "--trace", str(trace))
        assert result.exit_code == 0
        body = _body(result)
        assert body["message"] == "dynamics ended: equilibrium"
        assert body["data"]["initial"] == [[2], [3], [4], []]

        lines = [json.loads(line) for line in trace.read_text().splitlines()]
        assert lines[0]["type"] == "header"
        assert lines[0]["meta"]["tool_version"] == TOOL_VERSION
        assert lines[-1]["type"] == "result"
        assert len(lines) == body["data"]["moves"] + 2

    def test_random_start_is_seeded(self, invoke):
        args = ["dynamics", "--game", str(DATA / "games/unit7.json"), "--init", "random"]
        args += ["--order", "random", "--seed", "5", "--rounds", "20"]
        first, second = invoke(*args), invoke(*args)
        assert first.exit_code == 0
        assert _body(first)["data"] == _body(second)["data"]

    def test_profile_required(self, invoke):
        result = invoke("dynamics", "--game", str(DATA / "games/path4.json"))
        assert result.exit_code == 2

    def test_zero_rounds(self, invoke):
        data = _body(invoke("dynamics", *PATH4, "--rounds", "0"))["data"]
        assert data["outcome"] == "round-limit"
        assert data["moves"] == 0


class TestReplay:
    def _trace(self, invoke, tmp_path):
        trace = tmp_path / "trace.jsonl"
        assert invoke("dynamics", *PATH4, "--trace", str(trace)).exit_code == 0
        return trace

    def test_reproduces_the_run(self, invoke, tmp_path):
        trace = self._trace(invoke, tmp_path)
        result = invoke("replay", "--game", str(DATA / "games/path4.json"), "--trace", str(trace))
        assert result.exit_code == 0
        data = _body(result)["data"]
        assert data["outcome"] == "equilibrium"
        assert data["initial"] == [[2], [3], [4], []]
        assert data["moves"] == len(trace.read_text().splitlines()) - 2

    def test_tampered_result(self, invoke, tmp_path):
        trace = self._trace(invoke, tmp_path)
        lines = [json.loads(line) for line in trace.read_text().splitlines()]
        lines[-1]["final"] = [[2], [3], [4], []]
        trace.write_text("".join(json.dumps(line) + "\n" for line in lines))
        result = invoke("replay", "--game", str(DATA / "games/path4.json"), "--trace", str(trace))
        assert result.exit_code == 4
        assert _body(result)["data"]["recorded"] == [[2], [3], [4], []]

    def test_wrong_game(self, invoke, tmp_path):
        trace = self._trace(invoke, tmp_path)
        result = invoke("replay", "--game", str(DATA / "games/unit3.json"), "--trace", str(trace))
        assert result.exit_code == 2

    def test_not_utf8(self, invoke, tmp_path):
        trace = tmp_path / "trace.jsonl"
        trace.write_bytes(b"\xff\xfe\n")
        result = invoke("replay", "--game", str(DATA / "games/path4.json"), "--trace", str(trace))
        assert result.exit_code == 2


class TestEnumerate:
    def test_unit_triangle(self, invoke, tmp_path):
        out = tmp_path / "report.json"
        result = invoke("enumerate", "--game", str(DATA / "games/unit3.json"), "--out", str(out))
        assert result.exit_code == 0
        data = _body(result)["data"]
        assert data["count"] == 2
        assert data["profiles_examined"] == 8
        assert data["equilibria"][0] == {"strategies": [[2], [3], [1]], "diameter": 1}
        assert data["price_of_anarchy"]["price_of_anarchy"]["num"] == 1
        assert data["connectivity_holds"]

        saved = json.loads(out.read_text())
        assert saved["count"] == 2
        assert saved["meta"]["run_config"]["output_path"] == str(out)

    def test_profile_cap(self, invoke):
        result = invoke(
            "--profile-cap", "5", "enumerate", "--game", str(DATA / "games/unit3.json")
        )
        assert result.exit_code == 3


class TestGenerate:
    def test_spider_artifacts(self, invoke, tmp_path):
        result = invoke("generate", "--family", "spider", "--k", "2", "--out", str(tmp_path), "--verify")
        assert result.exit_code == 0
        data = _body(result)["data"]
        assert data["n"] == 7
        assert data["unchecked"] == []
        assert all(verdict["holds"] for verdict in data["verdicts"])
        assert data["expansion"]["f"][-1] == 7
        for name in ("game.json", "profile.json", "graph.dot", "construction.json"):
            assert (tmp_path / name).exists()

        game = json.loads((tmp_path / "game.json").read_text())
        assert game["budgets"] == [2, 0, 2, 0, 2, 0, 0]
        assert game["version"] == "max"

    def test_theorem3(self, invoke):
        result = invoke("generate", "--family", "theorem3", "--budgets", "2,0,1", "--verify")
        assert result.exit_code == 0
        data = _body(result)["data"]
        assert data["permutation"] == [2, 3, 1]
        assert data["budgets"] == [2, 0, 1]

    @pytest.mark.parametrize(
        "args",
        [
            ["--family", "theorem3", "--budgets", "3,0,0"],
            ["--family", "theorem3"],
            ["--family", "theorem3", "--budgets", "1,x"],
            ["--family", "word-graph", "--t", "5", "--k", "4"],
            ["--family", "spider"],
            ["--family", "cube", "--k", "2"],
        ],
    )
    def test_usage_errors(self, invoke, args):
        assert invoke("generate", *args).exit_code == 2

    def test_vertex_cap(self, invoke):
        result = invoke("--vertex-cap", "100", "generate", "--family", "sqrtlog", "--k", "4")
        assert result.exit_code == 3


class TestAnalysis:
    def test_triangle(self, invoke):
        result = invoke("analyze", *TRIANGLE, "--checks", "structure,connectivity,expansion")
        assert result.exit_code == 0
        data = _body(result)["data"]
        assert data["structure"]["cycle"] == [1, 2, 3]
        assert data["connectivity"]["holds"]
        assert data["expansion"] == {"f": [3]}

    def test_seven_cycle_violates_the_sum_structure(self, invoke):
        result = invoke("analyze", *CYCLE7, "--checks", "structure", "--no-verify")
        assert result.exit_code == 4
        assert _body(result)["data"]["structure"]["cycle_length"] == 7

    def test_unknown_check(self, invoke):
        assert invoke("analyze", *TRIANGLE, "--checks", "planarity").exit_code == 2

    def test_tree_bound_needs_a_tree_budget(self, invoke):
        assert invoke("analyze", *TRIANGLE, "--checks", "tree-bound").exit_code == 2

    def test_reduce(self, invoke):
        graph = str(DATA / "graphs/p5.json")
        result = invoke("reduce", "--kcenter", graph, "-k", "1", "--verify")
        assert result.exit_code == 0
        body = _body(result)
        assert body["message"] == "1-center value 2"
        assert body["data"]["centers"] == [3]
        assert body["data"]["brute_force"]["value"] == 2

    def test_reduce_star(self, invoke):
        graph = str(DATA / "graphs/star4.json")
        data = _body(invoke("reduce", "--kcenter", graph, "-k", "1"))["data"]
        assert data["value"] == 1
        assert data["centers"] == [1]
        assert data["budgets"] == [3, 0, 0, 0, 1]

    def test_reduce_median(self, invoke):
        graph = str(DATA / "graphs/p5.json")
        data = _body(invoke("reduce", "--kcenter", graph, "-k", "1", "--objective", "median"))["data"]
        assert data["value"] == 6


class TestRun:
    def test_exit_codes(self, capsys):
        assert run(["--threads", "1", "cost", *PATH4]) == 0
        assert run(["--threads", "1", "check", *BRACE]) == 4
        assert run(["--threads", "1", "--candidate-cap", "1", "check", *PATH4]) == 3
        capsys.readouterr()

    @pytest.mark.parametrize(
        "args",
        [
            ["--log-level", "LOUD", "cost", *PATH4],
            ["--threads", "0", "cost", *PATH4],
            ["frobnicate"],
            ["cost"],
        ],
    )
    def test_usage_errors(self, args, capsys):
        assert run(args) == 2
        capsys.readouterr()

    def test_version(self, invoke):
        result = invoke("--version")
        assert result.exit_code == 0
        assert TOOL_VERSION in result.output
