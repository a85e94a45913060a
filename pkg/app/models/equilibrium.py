"""
Best response, equilibrium and dynamics models
"""

from enum import Enum
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict

from .game import CostVersion, StrategyProfile


class ResponseMode(str, Enum):
    EXACT = "exact"
    SWAP = "swap"


class OrderPolicy(str, Enum):
    ROUND_ROBIN = "round-robin"
    RANDOM = "random"


class SufficientVerdict(str, Enum):
    PROVEN = "proven"
    INCONCLUSIVE = "inconclusive"


class BestResponseResult(BaseModel):
    """Outcome of one best-response computation"""

    model_config = ConfigDict(frozen=True)

    player: int
    strategy: Tuple[int, ...]
    cost: int
    current_cost: int
    improved: bool
    candidates_examined: int
    mode: ResponseMode


class Witness(BaseModel):
    """A player together with a strictly better strategy"""

    model_config = ConfigDict(frozen=True)

    player: int
    strategy: Tuple[int, ...]
    old_cost: int
    new_cost: int

    def to_json(self) -> dict:
        return {
            "player": self.player + 1,
            "strategy": [target + 1 for target in self.strategy],
            "old_cost": self.old_cost,
            "new_cost": self.new_cost,
        }


class EquilibriumVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    is_equilibrium: bool
    version: CostVersion
    witness: Optional[Witness] = None


class Move(BaseModel):
    """One applied, strictly improving move of a dynamics run"""

    model_config = ConfigDict(frozen=True)

    round: int
    player: int
    old_strategy: Tuple[int, ...]
    new_strategy: Tuple[int, ...]
    old_cost: int
    new_cost: int

    def to_json(self) -> dict:
        return {
            "round": self.round,
            "player": self.player + 1,
            "old_strategy": [target + 1 for target in self.old_strategy],
            "new_strategy": [target + 1 for target in self.new_strategy],
            "old_cost": self.old_cost,
            "new_cost": self.new_cost,
        }

    @classmethod
    def from_json(cls, record: dict) -> "Move":
        return cls(
            round=record["round"],
            player=record["player"] - 1,
            old_strategy=tuple(target - 1 for target in record["old_strategy"]),
            new_strategy=tuple(target - 1 for target in record["new_strategy"]),
            old_cost=record["old_cost"],
            new_cost=record["new_cost"],
        )


class DynamicsOutcome(str, Enum):
    EQUILIBRIUM = "equilibrium"
    SWAP_STABLE = "swap-stable"
    CYCLE_DETECTED = "cycle-detected"
    ROUND_LIMIT = "round-limit"


class DynamicsTrace(BaseModel):
    """Audit record of one best-response dynamics run"""

    model_config = ConfigDict(frozen=True)

    version: CostVersion
    order: OrderPolicy
    oracle: ResponseMode
    seed: int
    round_limit: int
    rounds: int
    initial: StrategyProfile
    final: StrategyProfile
    moves: Tuple[Move, ...] = ()
    outcome: DynamicsOutcome
    cycle_start: Optional[int] = None
    cycle_period: Optional[int] = None


class EquilibriumEnumeration(BaseModel):
    """All equilibria of a tiny game with a diameter summary"""

    model_config = ConfigDict(frozen=True)

    version: CostVersion
    profiles_examined: int
    equilibria: Tuple[StrategyProfile, ...]
    diameters: Tuple[int, ...]
    min_realization_diameter: Optional[int] = None
    all_connected: bool = True

    @property
    def count(self) -> int:
        return len(self.equilibria)

    @property
    def min_diameter(self) -> Optional[int]:
        return min(self.diameters) if self.diameters else None

    @property
    def max_diameter(self) -> Optional[int]:
        return max(self.diameters) if self.diameters else None
