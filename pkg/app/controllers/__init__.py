"""
Controllers for the budget game toolkit

Controllers handle orchestration and coordinate between services and the CLI.
They follow the same split as the rest of the package:
- Models define data structure
- Engine modules hold the algorithms
- Controllers load inputs, call the engine and return JSON-ready dicts
- The CLI renders those dicts and maps errors to exit codes
"""

from .analysis_controller import AnalysisController
from .construction_controller import ConstructionController
from .equilibrium_controller import EquilibriumController
from .game_controller import GameController

__all__ = [
    "GameController",
    "EquilibriumController",
    "ConstructionController",
    "AnalysisController",
]
