"""
Realization, distance and cost models
"""

from typing import Tuple

from pydantic import BaseModel, ConfigDict

from .game import CostVersion


class Realization(BaseModel):
    """Directed graph of a profile plus its underlying undirected graph

    `neighbors` is the simple underlying adjacency: a brace contributes a
    single adjacency there and is listed separately in `braces`.
    """

    model_config = ConfigDict(frozen=True)

    n: int
    arcs: Tuple[Tuple[int, int], ...]
    neighbors: Tuple[Tuple[int, ...], ...]
    braces: Tuple[Tuple[int, int], ...] = ()

    def out_degree(self, player: int) -> int:
        return sum(1 for owner, _ in self.arcs if owner == player)

    def in_brace(self, player: int) -> bool:
        return any(player in brace for brace in self.braces)

    @property
    def edge_count(self) -> int:
        """Edges of the underlying multigraph (a brace counts twice)"""
        return len(self.arcs)


class DistanceMatrix(BaseModel):
    """All-pairs underlying distances, n ** 2 between components"""

    model_config = ConfigDict(frozen=True)

    n: int
    dist: Tuple[Tuple[int, ...], ...]
    components: Tuple[Tuple[int, ...], ...]

    @property
    def kappa(self) -> int:
        return len(self.components)

    @property
    def connected(self) -> bool:
        return self.kappa <= 1


class CostReport(BaseModel):
    """Per-player cost and local diameter under one version"""

    model_config = ConfigDict(frozen=True)

    version: CostVersion
    costs: Tuple[int, ...]
    local_diameters: Tuple[int, ...]
    kappa: int
