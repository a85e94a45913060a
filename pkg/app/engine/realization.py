"""
Realizations, underlying distances and player costs.

Distances are measured in the underlying undirected graph; vertices in
different components are n ** 2 apart.
"""

import logging
from typing import Optional, Sequence

import networkx as nx
import numpy as np

from app.core.exceptions import BudgetMismatch, IndexOutOfRange, SelfLink
from app.models import (
    CostReport,
    CostVersion,
    DistanceMatrix,
    GameSpec,
    Realization,
    StrategyProfile,
)

from .base import distance_row, eccentricity, sorted_components, strategy_graph

logger = logging.getLogger(__name__)


def validate_profile(spec: GameSpec, profile: StrategyProfile) -> None:
    """Raise if the profile is not a feasible strategy profile of the game"""
    if profile.n != spec.n:
        raise IndexOutOfRange(
            f"profile lists {profile.n} strategies for a game with {spec.n} players"
        )
    for player, targets in enumerate(profile.strategies):
        for target in targets:
            if target < 0 or target >= spec.n:
                raise IndexOutOfRange(
                    f"player {player + 1} links to {target + 1}, outside 1..{spec.n}"
                )
            if target == player:
                raise SelfLink(f"player {player + 1} links to itself")
        if len(set(targets)) != len(targets) or len(targets) != spec.budgets[player]:
            raise BudgetMismatch(
                f"player {player + 1} has {len(set(targets))} distinct targets, "
                f"budget is {spec.budgets[player]}"
            )


def build_realization(spec: GameSpec, profile: StrategyProfile) -> Realization:
    """Directed realization of a feasible profile"""
    validate_profile(spec, profile)

    arcs = tuple(
        (owner, target)
        for owner, targets in enumerate(profile.strategies)
        for target in targets
    )
    owned = set(arcs)
    braces = tuple(
        (owner, target) for owner, target in arcs if owner < target and (target, owner) in owned
    )
    graph = strategy_graph(spec.n, profile.strategies)

    return Realization.model_construct(
        n=spec.n,
        arcs=arcs,
        neighbors=tuple(tuple(sorted(graph[v])) for v in range(spec.n)),
        braces=braces,
    )


def underlying_distances(r: Realization) -> DistanceMatrix:
    """All-pairs distances with n ** 2 across components"""
    graph = underlying_graph(r)
    c_inf = r.n * r.n
    rows = [tuple(distance_row(graph, source, c_inf)) for source in range(r.n)]
    components = sorted_components(graph)

    return DistanceMatrix.model_construct(
        n=r.n,
        dist=tuple(rows),
        components=tuple(tuple(members) for members in components),
    )


def _cost_from_row(row: Sequence[int], kappa: int, n: int, version: CostVersion) -> int:
    if n == 1:
        return 0
    if CostVersion(version) == CostVersion.SUM:
        return sum(row)
    return max(row) + (kappa - 1) * n * n


def cost(
    r: Realization,
    player: int,
    version: CostVersion,
    distances: Optional[DistanceMatrix] = None,
) -> int:
    """SUM or MAX cost of one player"""
    if distances is None:
        graph = underlying_graph(r)
        row = distance_row(graph, player, r.n * r.n)
        kappa = nx.number_connected_components(graph)
    else:
        row = distances.dist[player]
        kappa = distances.kappa
    return _cost_from_row(row, kappa, r.n, version)


def cost_report(r: Realization, version: CostVersion) -> CostReport:
    """Cost and local diameter of every player"""
    distances = underlying_distances(r)
    costs = tuple(
        _cost_from_row(distances.dist[player], distances.kappa, r.n, version)
        for player in range(r.n)
    )
    return CostReport(
        version=version,
        costs=costs,
        local_diameters=tuple(max(row) for row in distances.dist),
        kappa=distances.kappa,
    )


def local_diameter(
    r: Realization, player: int, distances: Optional[DistanceMatrix] = None
) -> int:
    """Largest distance from the player, n ** 2 when disconnected"""
    if distances is not None:
        return max(distances.dist[player])
    return eccentricity(underlying_graph(r), player)


def diameter(r: Realization, distances: Optional[DistanceMatrix] = None) -> int:
    if distances is None:
        distances = underlying_distances(r)
    return max(max(row) for row in distances.dist)


def underlying_graph(r: Realization) -> nx.Graph:
    """Simple undirected networkx view; braces collapse to one edge"""
    graph = nx.Graph()
    graph.add_nodes_from(range(r.n))
    graph.add_edges_from(r.arcs)
    return graph


def random_profile(spec: GameSpec, rng: np.random.Generator) -> StrategyProfile:
    """Uniformly random feasible profile"""
    strategies = []
    for player, budget in enumerate(spec.budgets):
        others = [v for v in range(spec.n) if v != player]
        chosen = rng.choice(len(others), size=budget, replace=False) if budget else []
        strategies.append(tuple(sorted(others[int(i)] for i in chosen)))
    return StrategyProfile.of(strategies)
