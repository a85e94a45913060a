"""
Shared graph utilities for the engine modules.

Vertices are 0..n-1 in every graph handled here.
"""

import logging
from math import comb
from typing import List, Sequence

import networkx as nx

from app.core.exceptions import EnumerationCapExceeded

logger = logging.getLogger(__name__)

UNREACHED = -1


def strategy_graph(n: int, strategies: Sequence[Sequence[int]]) -> nx.Graph:
    """Simple undirected graph of raw strategies; a brace is one edge"""
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(
        (owner, target) for owner, targets in enumerate(strategies) for target in targets
    )
    return graph


def distance_row(graph: nx.Graph, source: int, c_inf: int) -> List[int]:
    """Distances from `source`, c_inf for vertices in other components"""
    lengths = nx.single_source_shortest_path_length(graph, source)
    return [lengths.get(v, c_inf) for v in range(graph.number_of_nodes())]


def eccentricity(graph: nx.Graph, source: int) -> int:
    """Largest distance from `source`, n ** 2 when the graph is disconnected"""
    n = graph.number_of_nodes()
    lengths = nx.single_source_shortest_path_length(graph, source)
    if len(lengths) < n:
        return n * n
    return max(lengths.values())


def ball_covers(graph: nx.Graph, source: int, radius: int) -> bool:
    """Whether every vertex lies within `radius` of `source`"""
    reached = nx.single_source_shortest_path_length(graph, source, cutoff=radius)
    return len(reached) == graph.number_of_nodes()


def sorted_components(graph: nx.Graph) -> List[List[int]]:
    """Components as sorted vertex lists, ordered by smallest vertex"""
    return sorted((sorted(members) for members in nx.connected_components(graph)), key=min)


def ensure_within_cap(count: int, cap: int, what: str) -> None:
    """Raise EnumerationCapExceeded when an exhaustive search is too large"""
    if count > cap:
        raise EnumerationCapExceeded(
            f"{what}: {count} candidates exceed the enumeration cap {cap}"
        )
    logger.debug(f"{what}: {count} candidates (cap {cap})")


def strategy_count(n: int, budget: int) -> int:
    """Number of feasible strategies for a player with the given budget"""
    return comb(n - 1, budget)
