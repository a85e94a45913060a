"""
Builders shared by the test modules
"""

import json
from itertools import combinations, combinations_with_replacement, product
from pathlib import Path

from app.models import CostVersion, GameSpec, StrategyProfile


def game(budgets, version="sum") -> GameSpec:
    return GameSpec.from_budgets(budgets, CostVersion(version))


def profile(*strategies) -> StrategyProfile:
    """Profile from 1-based target lists"""
    return StrategyProfile.from_one_based(strategies)


def write_json(path: Path, data) -> str:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


def budget_shapes(n):
    """Every non-increasing budget vector of n players"""
    for shape in combinations_with_replacement(range(n - 1, -1, -1), n):
        yield list(shape)


def all_profiles(spec: GameSpec):
    """Every feasible profile of the game"""
    options = [
        combinations([v for v in range(spec.n) if v != player], budget)
        for player, budget in enumerate(spec.budgets)
    ]
    for strategies in product(*options):
        yield StrategyProfile.of(strategies)
