"""
k-center and k-median through a single player's best response.

Orienting a connected graph H and appending a player with budget k gives a
game where that player's best response picks k centers of H: its MAX cost is
1 + the k-center radius and its SUM cost is |V(H)| + the k-median value.
"""

import logging
from itertools import combinations
from math import comb
from typing import Callable, Sequence

import networkx as nx

from app.core.config import DEFAULT_CANDIDATE_CAP
from app.core.exceptions import InvalidGraph, InvalidParameter
from app.models import (
    CostVersion,
    FacilitySolution,
    GameSpec,
    KCenterReduction,
    StrategyProfile,
)

from .base import ensure_within_cap
from .best_response import best_response_exact

logger = logging.getLogger(__name__)


def _check_host(graph: nx.Graph, k: int) -> None:
    n = graph.number_of_nodes()
    if graph.is_directed() or graph.is_multigraph():
        raise InvalidGraph("host graph must be simple and undirected")
    if n < 2:
        raise InvalidGraph(f"host graph needs at least 2 vertices, got {n}")
    if nx.number_of_selfloops(graph):
        raise InvalidGraph("host graph has self-loops")
    if not nx.is_connected(graph):
        raise InvalidGraph("host graph is not connected")
    if k < 1 or k > n:
        raise InvalidParameter(f"k must lie in 1..{n}, got {k}")


def reduce_kcenter(graph: nx.Graph, k: int) -> KCenterReduction:
    """
    Game on V(H) plus one extra player of budget k.

    Edges of H are oriented from the smaller to the larger vertex (sorted
    order of the node labels); budgets are the resulting outdegrees.
    """
    _check_host(graph, k)
    vertices = sorted(graph.nodes)
    index = {v: i for i, v in enumerate(vertices)}
    n = len(vertices)

    strategies = [[] for _ in range(n)]
    for u, v in graph.edges:
        low, high = sorted((index[u], index[v]))
        strategies[low].append(high)
    strategies.append(list(range(k)))

    spec = GameSpec(
        n=n + 1,
        budgets=tuple(len(targets) for targets in strategies),
        version=CostVersion.MAX,
    )
    return KCenterReduction(
        spec=spec,
        profile=StrategyProfile.of(strategies),
        player=n,
        vertices=tuple(vertices),
        k=k,
    )


def solve_by_best_response(
    reduction: KCenterReduction,
    version: CostVersion = CostVersion.MAX,
    cap: int = DEFAULT_CANDIDATE_CAP,
) -> FacilitySolution:
    """k-center (MAX) or k-median (SUM) value read off the extra player's best response"""
    version = CostVersion(version)
    result = best_response_exact(
        reduction.spec, reduction.profile, reduction.player, version, cap
    )
    hosts = reduction.spec.n - 1
    value = result.cost - 1 if version == CostVersion.MAX else result.cost - hosts
    return FacilitySolution(
        value=value,
        centers=tuple(reduction.vertices[i] for i in result.strategy),
        subsets_examined=result.candidates_examined,
    )


def _brute_force(
    graph: nx.Graph,
    k: int,
    cap: int,
    objective: Callable[[Sequence[int]], int],
    what: str,
) -> FacilitySolution:
    _check_host(graph, k)
    vertices = sorted(graph.nodes)
    ensure_within_cap(comb(len(vertices), k), cap, what)
    dist = dict(nx.all_pairs_shortest_path_length(graph))

    best_value, best_set, examined = None, (), 0
    for centers in combinations(vertices, k):
        examined += 1
        value = objective([min(dist[c][v] for c in centers) for v in vertices])
        if best_value is None or value < best_value:
            best_value, best_set = value, centers
    return FacilitySolution(value=best_value, centers=best_set, subsets_examined=examined)


def brute_force_kcenter(
    graph: nx.Graph, k: int, cap: int = DEFAULT_CANDIDATE_CAP
) -> FacilitySolution:
    """min over k-subsets S of max_v dist(v, S)"""
    return _brute_force(graph, k, cap, max, f"{k}-center")


def brute_force_kmedian(
    graph: nx.Graph, k: int, cap: int = DEFAULT_CANDIDATE_CAP
) -> FacilitySolution:
    """min over k-subsets S of sum_v dist(v, S)"""
    return _brute_force(graph, k, cap, sum, f"{k}-median")
