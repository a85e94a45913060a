"""
Best responses of a single player against fixed opponents.

The exact oracle enumerates every feasible strategy, so it is only usable at
desk scale: finding a best response is NP-hard in both versions.
"""

import logging
from itertools import combinations
from typing import Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from app.core.config import DEFAULT_CANDIDATE_CAP
from app.models import (
    BestResponseResult,
    CostVersion,
    GameSpec,
    ResponseMode,
    StrategyProfile,
    Witness,
)

from .base import ensure_within_cap, sorted_components, strategy_count
from .realization import validate_profile

logger = logging.getLogger(__name__)


class DeviationEvaluator:
    """
    Cost of one player under alternative strategies, opponents fixed.

    Distances are precomputed once in the graph without the player; a
    shortest path from the player leaves it exactly once, so its distance to
    v under any strategy is 1 + min over its neighbors w of dist(w, v).
    """

    def __init__(
        self,
        n: int,
        strategies: Sequence[Sequence[int]],
        player: int,
        version: CostVersion,
    ):
        self.n = n
        self.player = player
        self.version = CostVersion(version)
        self.c_inf = n * n

        rest = nx.Graph()
        rest.add_nodes_from(range(n))
        in_neighbors = set()
        for owner, targets in enumerate(strategies):
            if owner == player:
                continue
            for target in targets:
                if target == player:
                    in_neighbors.add(owner)
                else:
                    rest.add_edge(owner, target)
        self.in_neighbors = frozenset(in_neighbors)

        self.dist = np.full((n, n), self.c_inf, dtype=np.int64)
        for source, lengths in nx.all_pairs_shortest_path_length(rest):
            if source == player:
                continue
            self.dist[source, list(lengths)] = list(lengths.values())

        components = sorted_components(rest)
        self.labels = [0] * n
        for index, members in enumerate(components):
            for v in members:
                self.labels[v] = index
        # the player itself is an isolated vertex of the reduced graph
        self.kappa_rest = len(components) - 1

    def cost_of(self, targets: Sequence[int]) -> int:
        n = self.n
        if n == 1:
            return 0
        neighborhood = self.in_neighbors.union(targets)
        if not neighborhood:
            kappa = self.kappa_rest + 1
            if self.version == CostVersion.SUM:
                return (n - 1) * self.c_inf
            return self.c_inf + (kappa - 1) * self.c_inf

        rows = self.dist[sorted(neighborhood)]
        row = np.minimum(rows.min(axis=0) + 1, self.c_inf)
        row[self.player] = 0
        if self.version == CostVersion.SUM:
            return int(row.sum())

        merged = len({self.labels[w] for w in neighborhood})
        kappa = self.kappa_rest + 1 - merged
        return int(row.max()) + (kappa - 1) * self.c_inf


def exact_response(
    n: int,
    strategies: Sequence[Sequence[int]],
    player: int,
    budget: int,
    version: CostVersion,
) -> Tuple[Tuple[int, ...], int, int, int]:
    """
    Exhaustive best response on raw tuples.

    Returns:
        (strategy, cost, current cost, candidates examined); the current
        strategy is kept when it is optimal, otherwise the lexicographically
        smallest minimizer wins
    """
    evaluator = DeviationEvaluator(n, strategies, player, version)
    current = tuple(strategies[player])
    current_cost = evaluator.cost_of(current)

    best, best_cost = current, current_cost
    others = [v for v in range(n) if v != player]
    examined = 0
    for candidate in combinations(others, budget):
        examined += 1
        value = evaluator.cost_of(candidate)
        if value < best_cost:
            best, best_cost = candidate, value
    return best, best_cost, current_cost, examined


def best_response_exact(
    spec: GameSpec,
    profile: StrategyProfile,
    player: int,
    version: Optional[CostVersion] = None,
    cap: int = DEFAULT_CANDIDATE_CAP,
) -> BestResponseResult:
    """Global minimum over all feasible strategies of one player"""
    validate_profile(spec, profile)
    version = CostVersion(version or spec.version)
    budget = spec.budgets[player]
    ensure_within_cap(
        strategy_count(spec.n, budget), cap, f"best response of player {player + 1}"
    )

    strategy, value, current_cost, examined = exact_response(
        spec.n, profile.strategies, player, budget, version
    )
    logger.debug(
        f"player {player + 1}: exact response cost {value} (was {current_cost}), "
        f"{examined} candidates"
    )
    return BestResponseResult(
        player=player,
        strategy=strategy,
        cost=value,
        current_cost=current_cost,
        improved=value < current_cost,
        candidates_examined=examined,
        mode=ResponseMode.EXACT,
    )


def _swap_neighbors(n: int, player: int, current: Sequence[int]):
    """Single-arc swaps in scan order: owned target ascending, new target ascending"""
    owned = set(current)
    for dropped in sorted(current):
        for added in range(n):
            if added == player or added in owned:
                continue
            yield tuple(sorted((owned - {dropped}) | {added}))


def swap_response(
    n: int,
    strategies: Sequence[Sequence[int]],
    player: int,
    version: CostVersion,
) -> Tuple[Tuple[int, ...], int, int, int]:
    """First-improvement hill climb over single-arc swaps on raw tuples"""
    evaluator = DeviationEvaluator(n, strategies, player, version)
    current = tuple(strategies[player])
    current_cost = start_cost = evaluator.cost_of(current)
    examined = 0

    improved = True
    while improved:
        improved = False
        for candidate in _swap_neighbors(n, player, current):
            examined += 1
            value = evaluator.cost_of(candidate)
            if value < current_cost:
                current, current_cost = candidate, value
                improved = True
                break
    return current, current_cost, start_cost, examined


def best_response_swap(
    spec: GameSpec,
    profile: StrategyProfile,
    player: int,
    version: Optional[CostVersion] = None,
) -> BestResponseResult:
    """Hill climb over single-arc swaps until no swap strictly improves"""
    validate_profile(spec, profile)
    version = CostVersion(version or spec.version)

    strategy, value, start_cost, examined = swap_response(
        spec.n, profile.strategies, player, version
    )
    return BestResponseResult(
        player=player,
        strategy=strategy,
        cost=value,
        current_cost=start_cost,
        improved=value < start_cost,
        candidates_examined=examined,
        mode=ResponseMode.SWAP,
    )


def first_swap_improvement(
    n: int,
    strategies: Sequence[Sequence[int]],
    player: int,
    version: CostVersion,
) -> Optional[Witness]:
    """The first strictly improving single swap of a player, if any"""
    evaluator = DeviationEvaluator(n, strategies, player, version)
    current = tuple(strategies[player])
    current_cost = evaluator.cost_of(current)
    for candidate in _swap_neighbors(n, player, current):
        value = evaluator.cost_of(candidate)
        if value < current_cost:
            return Witness(
                player=player, strategy=candidate, old_cost=current_cost, new_cost=value
            )
    return None
