"""
Runtime settings

Values come from the environment (a local .env file is honoured) and can be
overridden per run by CLI flags.
"""

import os
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field

DEFAULT_CANDIDATE_CAP = 10_000_000
DEFAULT_PROFILE_CAP = 10_000_000
DEFAULT_VERTEX_CAP = 1 << 20
DEFAULT_ROUND_LIMIT = 1000

TOOL_NAME = "budgetnet"
TOOL_VERSION = "0.1.0"


class Settings(BaseModel):
    """Resolved caps, parallelism and logging configuration"""

    model_config = ConfigDict(frozen=True)

    threads: int = Field(default=1, ge=1)
    candidate_cap: int = Field(default=DEFAULT_CANDIDATE_CAP, ge=1)
    profile_cap: int = Field(default=DEFAULT_PROFILE_CAP, ge=1)
    vertex_cap: int = Field(default=DEFAULT_VERTEX_CAP, ge=1)
    round_limit: int = Field(default=DEFAULT_ROUND_LIMIT, ge=0)
    log_level: str = "INFO"


def _env_int(name: str, default: int) -> int:
    value = os.getenv(name)
    if value is None or value.strip() == "":
        return default
    return int(value)


def get_settings(**overrides: Optional[int]) -> Settings:
    """Build settings from the environment, then apply non-None overrides"""
    load_dotenv()

    values = {
        "threads": _env_int("BBNCG_THREADS", os.cpu_count() or 1),
        "candidate_cap": _env_int("BBNCG_CANDIDATE_CAP", DEFAULT_CANDIDATE_CAP),
        "profile_cap": _env_int("BBNCG_PROFILE_CAP", DEFAULT_PROFILE_CAP),
        "vertex_cap": _env_int("BBNCG_VERTEX_CAP", DEFAULT_VERTEX_CAP),
        "round_limit": _env_int("BBNCG_ROUND_LIMIT", DEFAULT_ROUND_LIMIT),
        "log_level": os.getenv("BBNCG_LOG_LEVEL", "INFO").upper(),
    }
    values.update({key: value for key, value in overrides.items() if value is not None})

    return Settings(**values)
