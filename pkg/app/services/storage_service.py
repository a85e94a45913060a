"""
Abstract Storage Service Interface

This defines the contract for reading and writing games, profiles, host
graphs, dynamics traces and reports. All files use 1-based player indices.
"""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import networkx as nx

from app.models import DynamicsTrace, GameSpec, Move, StrategyProfile

PathLike = Union[str, Path]


class StorageService(ABC):
    """Abstract storage service interface"""

    @abstractmethod
    def load_game(self, path: PathLike) -> GameSpec:
        """Read {"n", "budgets", "version"}"""

    @abstractmethod
    def save_game(self, spec: GameSpec, path: PathLike, meta: Optional[Dict] = None) -> None:
        """Write a game file"""

    @abstractmethod
    def load_profile(self, path: PathLike) -> StrategyProfile:
        """Read {"strategies": [[int]]} with 1-based targets"""

    @abstractmethod
    def save_profile(
        self, profile: StrategyProfile, path: PathLike, meta: Optional[Dict] = None
    ) -> None:
        """Write a profile file"""

    @abstractmethod
    def load_graph(self, path: PathLike) -> nx.Graph:
        """Read {"n", "edges"} into a simple graph on vertices 1..n"""

    @abstractmethod
    def export_dot(
        self,
        spec: GameSpec,
        profile: StrategyProfile,
        path: PathLike,
        labels: Optional[Sequence[str]] = None,
    ) -> None:
        """Write the realization as a DOT digraph, one edge per arc"""

    @abstractmethod
    def write_trace(
        self, trace: DynamicsTrace, path: PathLike, meta: Optional[Dict] = None
    ) -> None:
        """Write a dynamics trace as JSON lines"""

    @abstractmethod
    def read_trace(
        self, path: PathLike
    ) -> Tuple[Dict[str, Any], List[Move], Dict[str, Any]]:
        """Read back (header, moves, result) of a JSON-lines trace"""

    @abstractmethod
    def save_json(self, data: Any, path: PathLike) -> None:
        """Write any JSON-serializable report"""
