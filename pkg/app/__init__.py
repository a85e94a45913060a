"""
budgetnet: bounded-budget network creation games

Equilibrium constructions, best responses, dynamics and structural
validators behind a JSON-emitting command line.
"""

from app.core.config import TOOL_VERSION

__version__ = TOOL_VERSION
