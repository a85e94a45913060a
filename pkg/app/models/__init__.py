"""
Data models for the budget game toolkit

Immutable pydantic models shared by the engine, services and controllers.
"""

from .analysis import (
    ClaimVerdict,
    ConnectivityVerdict,
    DiameterSearch,
    FacilitySolution,
    KCenterReduction,
    PoAReport,
    StructureReport,
    TreeBoundVerdict,
)
from .construction import Claim, ClaimKind, ConstructionOutput, Provenance
from .equilibrium import (
    BestResponseResult,
    DynamicsOutcome,
    DynamicsTrace,
    EquilibriumEnumeration,
    EquilibriumVerdict,
    Move,
    OrderPolicy,
    ResponseMode,
    SufficientVerdict,
    Witness,
)
from .game import MAX_PLAYERS, CostVersion, GameSpec, StrategyProfile
from .realization import CostReport, DistanceMatrix, Realization
from .run_config import RunConfig

__all__ = [
    "MAX_PLAYERS",
    "CostVersion",
    "GameSpec",
    "StrategyProfile",
    "Realization",
    "DistanceMatrix",
    "CostReport",
    "BestResponseResult",
    "Witness",
    "EquilibriumVerdict",
    "SufficientVerdict",
    "Move",
    "DynamicsOutcome",
    "DynamicsTrace",
    "EquilibriumEnumeration",
    "OrderPolicy",
    "ResponseMode",
    "Claim",
    "ClaimKind",
    "ConstructionOutput",
    "Provenance",
    "ClaimVerdict",
    "StructureReport",
    "ConnectivityVerdict",
    "DiameterSearch",
    "TreeBoundVerdict",
    "PoAReport",
    "KCenterReduction",
    "FacilitySolution",
    "RunConfig",
]
