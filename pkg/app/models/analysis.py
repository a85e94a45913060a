"""
Analysis report models
"""

from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from .game import CostVersion, GameSpec, StrategyProfile


class ClaimVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    claim: str
    holds: bool
    witness: Optional[Dict[str, Any]] = None


class StructureReport(BaseModel):
    """Cycle structure of a unit-budget realization"""

    model_config = ConfigDict(frozen=True)

    cycle: Tuple[int, ...] = ()
    cycle_length: Optional[int] = None
    max_distance_to_cycle: int = 0
    brace_count: int = 0
    verdicts: Tuple[ClaimVerdict, ...] = ()

    def verdict(self, claim: str) -> Optional[ClaimVerdict]:
        for verdict in self.verdicts:
            if verdict.claim == claim:
                return verdict
        return None


class ConnectivityVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    holds: bool
    diameter: int
    connectivity: int
    min_budget: int


class TreeBoundVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    holds: bool
    diameter: int
    bound: float


class PoAReport(BaseModel):
    """Exhaustive price of anarchy / stability of a tiny game"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    version: CostVersion
    min_realization_diameter: int
    min_equilibrium_diameter: Optional[int] = None
    max_equilibrium_diameter: Optional[int] = None
    equilibrium_count: int
    price_of_anarchy: Optional[Fraction] = None
    price_of_stability: Optional[Fraction] = None

    def to_json(self) -> dict:
        def rational(value):
            if value is None:
                return None
            return {
                "num": value.numerator,
                "den": value.denominator,
                "decimal": float(value),
            }

        return {
            "version": self.version.value,
            "min_realization_diameter": self.min_realization_diameter,
            "min_equilibrium_diameter": self.min_equilibrium_diameter,
            "max_equilibrium_diameter": self.max_equilibrium_diameter,
            "equilibrium_count": self.equilibrium_count,
            "price_of_anarchy": rational(self.price_of_anarchy),
            "price_of_stability": rational(self.price_of_stability),
        }


class KCenterReduction(BaseModel):
    """Game whose appended player's best response solves k-center on H"""

    model_config = ConfigDict(frozen=True)

    spec: GameSpec
    profile: StrategyProfile
    player: int
    # vertices[i] is the H vertex played by player i (i < player)
    vertices: Tuple[Any, ...]
    k: int


class FacilitySolution(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: int
    centers: Tuple[Any, ...]
    subsets_examined: int = 0


class DiameterSearch(BaseModel):
    """Largest SUM equilibrium diameter reached by seeded dynamics"""

    model_config = ConfigDict(frozen=True)

    runs: int
    seed: int
    equilibria_found: int
    largest_diameter: Optional[int] = None
    spec: Optional[GameSpec] = None
    profile: Optional[StrategyProfile] = None
    diameters: Dict[int, int] = Field(default_factory=dict)
