"""
Run configuration embedded in every artifact
"""

from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict

from .game import CostVersion


class RunConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    command: str
    input_paths: Tuple[str, ...] = ()
    output_path: Optional[str] = None
    seed: int = 0
    candidate_cap: int
    profile_cap: int
    vertex_cap: int
    round_limit: int
    threads: int = 1
    version: Optional[CostVersion] = None
    order: Optional[str] = None
