"""
Game Controller

Handles cost and realization queries on a stored game and profile.
"""

from typing import Any, Dict, Optional

from app.core.exceptions import IndexOutOfRange
from app.engine import build_realization, cost_report, underlying_distances
from app.models import CostVersion
from app.services import storage_service


class GameController:
    """Controller for cost evaluation"""

    def __init__(self):
        self.storage_service = storage_service

    def get_costs(
        self,
        game_path: str,
        profile_path: str,
        player: Optional[int] = None,
        version: Optional[str] = None,
    ) -> Dict[str, Any]:
        """Cost and local diameter of every player, or of one (1-based) player"""
        spec = self.storage_service.load_game(game_path)
        profile = self.storage_service.load_profile(profile_path)
        version = CostVersion(version or spec.version)

        realization = build_realization(spec, profile)
        report = cost_report(realization, version)
        distances = underlying_distances(realization)

        summary = {
            "n": spec.n,
            "version": version.value,
            "kappa": report.kappa,
            "diameter": max(report.local_diameters) if spec.n else 0,
            "braces": [[u + 1, v + 1] for u, v in realization.braces],
        }
        if player is None:
            summary["costs"] = list(report.costs)
            summary["local_diameters"] = list(report.local_diameters)
            return summary

        if player < 1 or player > spec.n:
            raise IndexOutOfRange(f"player {player} outside 1..{spec.n}")
        summary.update(
            {
                "player": player,
                "cost": report.costs[player - 1],
                "local_diameter": report.local_diameters[player - 1],
                "distances": list(distances.dist[player - 1]),
            }
        )
        return summary
