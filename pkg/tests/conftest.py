"""
Shared fixtures for the test suite
"""

import networkx as nx
import pytest

from tests.helpers import game, profile, write_json


@pytest.fixture
def path4():
    """Directed path 1 -> 2 -> 3 -> 4"""
    return game([1, 1, 1, 0]), profile([2], [3], [4], [])


@pytest.fixture
def triangle():
    return game([1, 1, 1]), profile([2], [3], [1])


@pytest.fixture
def brace3():
    """Brace {1, 2} plus the arc 3 -> 1"""
    return game([1, 1, 1]), profile([2], [1], [1])


@pytest.fixture
def cycle7():
    return game([1] * 7), profile([2], [3], [4], [5], [6], [7], [1])


@pytest.fixture
def p5():
    return nx.path_graph(range(1, 6))


@pytest.fixture
def game_files(tmp_path):
    """Writes a game and a profile file, returns their paths"""

    def _write(budgets, strategies, version="sum", name="g"):
        game_path = write_json(
            tmp_path / f"{name}.json",
            {"n": len(budgets), "budgets": list(budgets), "version": version},
        )
        profile_path = write_json(
            tmp_path / f"{name}-profile.json",
            {"strategies": [list(s) for s in strategies]},
        )
        return game_path, profile_path

    return _write
