"""
Analysis Controller

Handles the structural validators and the k-center / k-median reduction.
"""

import logging
from typing import Any, Dict, Optional, Sequence

from app.core.config import DEFAULT_CANDIDATE_CAP
from app.core.exceptions import CheckFailed, InvalidParameter
from app.engine import (
    brute_force_kcenter,
    brute_force_kmedian,
    build_realization,
    check_connectivity_theorem,
    expansion_profile,
    reduce_kcenter,
    solve_by_best_response,
    tree_diameter_bound_check,
    underlying_graph,
    unit_budget_structure,
)
from app.models import CostVersion
from app.services import storage_service

logger = logging.getLogger(__name__)

CHECKS = ("structure", "tree-bound", "connectivity", "expansion")


class AnalysisController:
    """Controller for structural validators and measurements"""

    def __init__(self):
        self.storage_service = storage_service

    def analyze(
        self,
        game_path: str,
        profile_path: str,
        checks: Sequence[str] = CHECKS,
        version: Optional[str] = None,
        verify: bool = True,
        cap: int = DEFAULT_CANDIDATE_CAP,
    ) -> Dict[str, Any]:
        """Run the requested validators; raises CheckFailed if any reports a violation"""
        spec = self.storage_service.load_game(game_path)
        profile = self.storage_service.load_profile(profile_path)
        version = CostVersion(version or spec.version)

        unknown = [check for check in checks if check not in CHECKS]
        if unknown:
            raise InvalidParameter(f"unknown checks {unknown}, expected a subset of {CHECKS}")

        results: Dict[str, Any] = {}
        failed = []

        if "structure" in checks:
            report = unit_budget_structure(spec, profile, version)
            results["structure"] = {
                "cycle": [v + 1 for v in report.cycle],
                "cycle_length": report.cycle_length,
                "max_distance_to_cycle": report.max_distance_to_cycle,
                "brace_count": report.brace_count,
                "verdicts": [v.model_dump(mode="json") for v in report.verdicts],
            }
            claim = report.verdict(version.value)
            if not claim.holds:
                failed.append("structure")

        if "tree-bound" in checks:
            verdict = tree_diameter_bound_check(spec, profile)
            results["tree-bound"] = verdict.model_dump(mode="json")
            if not verdict.holds:
                failed.append("tree-bound")

        if "connectivity" in checks:
            verdict = check_connectivity_theorem(spec, profile, verify, cap)
            results["connectivity"] = verdict.model_dump(mode="json")
            if not verdict.holds:
                failed.append("connectivity")

        if "expansion" in checks:
            graph = underlying_graph(build_realization(spec, profile))
            profile_f = expansion_profile(graph)
            logger.info(f"expansion profile f(1..{len(profile_f)}) = {profile_f}")
            results["expansion"] = {"f": profile_f}

        if failed:
            raise CheckFailed(f"validators report violations: {', '.join(failed)}", data=results)
        return results

    def reduce(
        self,
        graph_path: str,
        k: int,
        objective: str = "center",
        verify: bool = False,
        cap: int = DEFAULT_CANDIDATE_CAP,
    ) -> Dict[str, Any]:
        """Solve k-center / k-median on a host graph through the appended player"""
        if objective not in ("center", "median"):
            raise InvalidParameter(f"objective must be center or median, got {objective!r}")
        graph = self.storage_service.load_graph(graph_path)
        reduction = reduce_kcenter(graph, k)
        version = CostVersion.MAX if objective == "center" else CostVersion.SUM
        solution = solve_by_best_response(reduction, version, cap)

        result = {
            "objective": objective,
            "k": k,
            "n": graph.number_of_nodes(),
            "player": reduction.player + 1,
            "budgets": list(reduction.spec.budgets),
            "value": solution.value,
            "centers": list(solution.centers),
            "candidates_examined": solution.subsets_examined,
        }
        if verify:
            oracle = brute_force_kcenter if objective == "center" else brute_force_kmedian
            expected = oracle(graph, k, cap)
            result["brute_force"] = {
                "value": expected.value,
                "centers": list(expected.centers),
                "subsets_examined": expected.subsets_examined,
            }
            if expected.value != solution.value:
                raise CheckFailed(
                    f"best response value {solution.value} differs from the "
                    f"brute-force optimum {expected.value}",
                    data=result,
                )
        return result
