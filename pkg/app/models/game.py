"""
Game and strategy data models

Players are 0-based inside the toolkit; every file and CLI surface is
1-based, converted at the edges with from_one_based/to_one_based.
"""

from enum import Enum
from typing import Iterable, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from app.core.exceptions import IndexOutOfRange, InvalidBudget, InvalidGame

# Largest n for which n ** 3 (the SUM cost ceiling) fits in a signed 64-bit word.
MAX_PLAYERS = 2_000_000


class CostVersion(str, Enum):
    SUM = "sum"
    MAX = "max"


class GameSpec(BaseModel):
    """Player count, budget vector and cost version of one game"""

    model_config = ConfigDict(frozen=True)

    n: int
    budgets: Tuple[int, ...]
    version: CostVersion = CostVersion.SUM

    @model_validator(mode="after")
    def _check_budgets(self) -> "GameSpec":
        if self.n < 1:
            raise InvalidGame(f"player count must be positive, got {self.n}")
        if self.n > MAX_PLAYERS:
            raise InvalidGame(
                f"player count {self.n} exceeds the 64-bit cost guarantee ({MAX_PLAYERS})"
            )
        if len(self.budgets) != self.n:
            raise InvalidBudget(
                f"expected {self.n} budgets, got {len(self.budgets)}"
            )
        for player, budget in enumerate(self.budgets):
            if budget < 0 or budget >= self.n:
                raise InvalidBudget(
                    f"budget of player {player + 1} is {budget}, must lie in 0..{self.n - 1}"
                )
        return self

    @classmethod
    def from_budgets(
        cls, budgets: Sequence[int], version: CostVersion = CostVersion.SUM
    ) -> "GameSpec":
        return cls(n=len(budgets), budgets=tuple(budgets), version=version)

    def with_version(self, version: CostVersion) -> "GameSpec":
        return self.model_copy(update={"version": CostVersion(version)})

    @property
    def total_budget(self) -> int:
        return sum(self.budgets)


class StrategyProfile(BaseModel):
    """Per-player sets of link targets, stored sorted"""

    model_config = ConfigDict(frozen=True)

    strategies: Tuple[Tuple[int, ...], ...]

    @field_validator("strategies")
    @classmethod
    def _sort_targets(cls, value):
        return tuple(tuple(sorted(targets)) for targets in value)

    @classmethod
    def of(cls, strategies: Iterable[Iterable[int]]) -> "StrategyProfile":
        """Trusted constructor for already-sorted 0-based strategies"""
        return cls.model_construct(
            strategies=tuple(tuple(sorted(targets)) for targets in strategies)
        )

    @classmethod
    def from_one_based(cls, strategies: Iterable[Iterable[int]]) -> "StrategyProfile":
        converted = []
        for player, targets in enumerate(strategies, start=1):
            row = []
            for target in targets:
                if target < 1:
                    raise IndexOutOfRange(
                        f"player {player} links to {target}; targets are 1-based"
                    )
                row.append(target - 1)
            converted.append(row)
        return cls(strategies=tuple(tuple(row) for row in converted))

    def to_one_based(self):
        return [[target + 1 for target in targets] for targets in self.strategies]

    @property
    def n(self) -> int:
        return len(self.strategies)

    def replace(self, player: int, targets: Iterable[int]) -> "StrategyProfile":
        strategies = list(self.strategies)
        strategies[player] = tuple(sorted(targets))
        return StrategyProfile.model_construct(strategies=tuple(strategies))
