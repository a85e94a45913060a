"""
Construction output models
"""

from enum import Enum
from typing import Any, Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from .game import CostVersion, GameSpec, StrategyProfile


class Provenance(str, Enum):
    THM3_CASE1 = "theorem3-case1"
    THM3_CASE2 = "theorem3-case2"
    THM3_CASE3 = "theorem3-case3"
    SPIDER = "spider"
    BINARY_TREE = "binary-tree"
    WORD_GRAPH = "word-graph"
    SQRTLOG = "sqrtlog"


class ClaimKind(str, Enum):
    EQUILIBRIUM = "equilibrium"
    DIAMETER_EQUALS = "diameter-equals"
    DIAMETER_AT_MOST = "diameter-at-most"
    MIN_DEGREE_AT_LEAST = "min-degree-at-least"
    MAX_DEGREE_AT_MOST = "max-degree-at-most"
    TREE = "tree"


class Claim(BaseModel):
    """A machine-checkable statement attached to a construction"""

    model_config = ConfigDict(frozen=True)

    kind: ClaimKind
    value: Optional[int] = None
    versions: Tuple[CostVersion, ...] = ()


class ConstructionOutput(BaseModel):
    model_config = ConfigDict(frozen=True)

    spec: GameSpec
    profile: StrategyProfile
    provenance: Provenance
    claims: Tuple[Claim, ...] = ()
    # permutation[i] is the original player sitting at sorted position i
    permutation: Optional[Tuple[int, ...]] = None
    labels: Optional[Tuple[str, ...]] = None
    details: Dict[str, Any] = Field(default_factory=dict)

    def claimed(self, kind: ClaimKind) -> Optional[Claim]:
        for claim in self.claims:
            if claim.kind == kind:
                return claim
        return None
