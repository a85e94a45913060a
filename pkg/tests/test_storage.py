from pathlib import Path

import pytest

from app.core.exceptions import IndexOutOfRange, InvalidBudget, InvalidGame, InvalidGraph
from app.engine import best_response_dynamics
from app.models import CostVersion, DynamicsOutcome
from app.services import JsonStorageService
from tests.helpers import game, profile, write_json

DATA = Path(__file__).resolve().parents[1] / "app" / "data"


@pytest.fixture
def storage():
    return JsonStorageService()


class TestGames:
    def test_version_defaults_to_sum(self, storage, tmp_path):
        path = write_json(tmp_path / "g.json", {"budgets": [1, 1, 1]})
        spec = storage.load_game(path)
        assert spec.n == 3
        assert spec.version == CostVersion.SUM

    def test_save_and_load(self, storage, tmp_path):
        path = tmp_path / "out" / "g.json"
        storage.save_game(game([2, 0, 1], "max"), path, meta={"seed": 4})
        assert storage.load_game(path) == game([2, 0, 1], "max")

    def test_missing_file(self, storage, tmp_path):
        with pytest.raises(InvalidGame):
            storage.load_game(tmp_path / "absent.json")

    def test_bad_json(self, storage, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{budgets: [1", encoding="utf-8")
        with pytest.raises(InvalidGame):
            storage.load_game(path)

    def test_not_utf8(self, storage, tmp_path):
        path = tmp_path / "bad.json"
        path.write_bytes(b'\xff\xfe{"n": 2}')
        with pytest.raises(InvalidGame):
            storage.load_game(path)

    def test_missing_budgets(self, storage, tmp_path):
        with pytest.raises(InvalidGame):
            storage.load_game(write_json(tmp_path / "g.json", {"n": 3}))

    def test_unknown_version(self, storage, tmp_path):
        path = write_json(tmp_path / "g.json", {"budgets": [1, 1], "version": "avg"})
        with pytest.raises(InvalidGame):
            storage.load_game(path)

    def test_budget_too_large(self, storage, tmp_path):
        path = write_json(tmp_path / "g.json", {"n": 3, "budgets": [3, 0, 0]})
        with pytest.raises(InvalidBudget):
            storage.load_game(path)


class TestProfiles:
    def test_one_based_on_disk(self, storage, tmp_path):
        path = write_json(tmp_path / "p.json", {"strategies": [[3, 2], [], [1]]})
        loaded = storage.load_profile(path)
        assert loaded.strategies == ((1, 2), (), (0,))

        storage.save_profile(loaded, tmp_path / "q.json")
        assert storage.load_profile(tmp_path / "q.json") == loaded

    def test_zero_target(self, storage, tmp_path):
        path = write_json(tmp_path / "p.json", {"strategies": [[0]]})
        with pytest.raises(IndexOutOfRange):
            storage.load_profile(path)

    def test_missing_strategies(self, storage, tmp_path):
        with pytest.raises(InvalidGame):
            storage.load_profile(write_json(tmp_path / "p.json", {"moves": []}))


class TestGraphs:
    def test_vertices_are_one_based(self, storage, tmp_path):
        path = write_json(tmp_path / "h.json", {"n": 4, "edges": [[1, 2], [2, 3]]})
        graph = storage.load_graph(path)
        assert sorted(graph.nodes) == [1, 2, 3, 4]
        assert graph.number_of_edges() == 2

    @pytest.mark.parametrize(
        "data",
        [
            {"n": 3, "edges": [[1, 4]]},
            {"n": 3, "edges": [[2, 2]]},
            {"n": 3, "edges": [[1, 2], [2, 1]]},
            {"edges": [[1, 2]]},
        ],
    )
    def test_rejects_bad_graphs(self, storage, tmp_path, data):
        with pytest.raises(InvalidGraph):
            storage.load_graph(write_json(tmp_path / "h.json", data))

    def test_bundled_graph(self, storage):
        graph = storage.load_graph(DATA / "graphs" / "p5.json")
        assert graph.number_of_nodes() == 5
        assert graph.number_of_edges() == 4


class TestExports:
    def test_dot_has_one_edge_per_arc(self, storage, tmp_path, brace3):
        spec, prof = brace3
        path = tmp_path / "g.dot"
        storage.export_dot(spec, prof, path, labels=["a", "b", "c"])
        text = path.read_text(encoding="utf-8")
        assert text.startswith("// n=3 version=sum\ndigraph realization {")
        assert '  1 [label="a"];' in text
        assert "  1 -> 2;" in text
        assert "  2 -> 1;" in text
        assert "  3 -> 1;" in text
        assert text.count("->") == 3

    def test_trace_lines(self, storage, tmp_path, path4):
        trace = best_response_dynamics(*path4)
        path = tmp_path / "trace.jsonl"
        storage.write_trace(trace, path, meta={"tool": "budgetnet"})

        header, moves, result = storage.read_trace(path)
        assert header["initial"] == [[2], [3], [4], []]
        assert header["meta"] == {"tool": "budgetnet"}
        assert moves == list(trace.moves)
        assert result["outcome"] == DynamicsOutcome.EQUILIBRIUM.value
        assert result["final"] == trace.final.to_one_based()

    def test_malformed_trace(self, storage, tmp_path):
        path = tmp_path / "trace.jsonl"
        path.write_text('{"type": "header"}\nnot json\n', encoding="utf-8")
        with pytest.raises(InvalidGame):
            storage.read_trace(path)

    def test_trace_not_utf8(self, storage, tmp_path):
        path = tmp_path / "trace.jsonl"
        path.write_bytes(b"\xc3\x28\n")
        with pytest.raises(InvalidGame):
            storage.read_trace(path)

    def test_report(self, storage, tmp_path):
        storage.save_json({"count": 2}, tmp_path / "r.json")
        assert (tmp_path / "r.json").read_text(encoding="utf-8") == '{\n  "count": 2\n}\n'


def test_profile_helper_matches_loader(storage, tmp_path):
    path = write_json(tmp_path / "p.json", {"strategies": [[2], [3], [1]]})
    assert storage.load_profile(path) == profile([2], [3], [1])
