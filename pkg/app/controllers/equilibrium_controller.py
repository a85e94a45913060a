"""
Equilibrium Controller

Handles best responses, equilibrium checks, dynamics runs and replays,
exhaustive enumeration and the diameter search.
"""

import logging
from typing import Any, Dict, Optional

import numpy as np

from app.core.config import DEFAULT_CANDIDATE_CAP, DEFAULT_PROFILE_CAP, DEFAULT_ROUND_LIMIT
from app.core.exceptions import (
    CheckFailed,
    IndexOutOfRange,
    InvalidGame,
    InvalidParameter,
    NotAnEquilibrium,
)
from app.engine import (
    best_response_dynamics,
    best_response_exact,
    best_response_swap,
    enumerate_equilibria,
    is_equilibrium_exact,
    is_equilibrium_sufficient,
    is_swap_equilibrium,
    poa_report,
    random_profile,
    replay_trace,
    search_sum_diameter,
    validate_profile,
)
from app.models import (
    CostVersion,
    OrderPolicy,
    ResponseMode,
    StrategyProfile,
    SufficientVerdict,
)
from app.services import storage_service

logger = logging.getLogger(__name__)


class EquilibriumController:
    """Controller for equilibrium operations"""

    def __init__(self):
        self.storage_service = storage_service

    def get_best_response(
        self,
        game_path: str,
        profile_path: str,
        player: int,
        mode: str = "exact",
        version: Optional[str] = None,
        cap: int = DEFAULT_CANDIDATE_CAP,
    ) -> Dict[str, Any]:
        """Best response of one (1-based) player"""
        spec = self.storage_service.load_game(game_path)
        profile = self.storage_service.load_profile(profile_path)
        if player < 1 or player > spec.n:
            raise IndexOutOfRange(f"player {player} outside 1..{spec.n}")

        if ResponseMode(mode) == ResponseMode.EXACT:
            result = best_response_exact(spec, profile, player - 1, version, cap)
        else:
            result = best_response_swap(spec, profile, player - 1, version)

        return {
            "player": player,
            "mode": result.mode.value,
            "version": CostVersion(version or spec.version).value,
            "strategy": [t + 1 for t in result.strategy],
            "cost": result.cost,
            "current_cost": result.current_cost,
            "improved": result.improved,
            "candidates_examined": result.candidates_examined,
        }

    def check_equilibrium(
        self,
        game_path: str,
        profile_path: str,
        mode: str = "exact",
        version: Optional[str] = None,
        cap: int = DEFAULT_CANDIDATE_CAP,
    ) -> Dict[str, Any]:
        """
        Check a profile; raises NotAnEquilibrium with the witness on failure.

        The sufficient mode never fails: Inconclusive makes no claim.
        """
        spec = self.storage_service.load_game(game_path)
        profile = self.storage_service.load_profile(profile_path)

        if mode == "sufficient":
            verdict = is_equilibrium_sufficient(spec, profile)
            return {
                "mode": mode,
                "verdict": verdict.value,
                "proven": verdict == SufficientVerdict.PROVEN,
            }

        if mode == "exact":
            verdict = is_equilibrium_exact(spec, profile, version, cap)
        elif mode == "swap":
            verdict = is_swap_equilibrium(spec, profile, version)
        else:
            raise InvalidParameter(f"unknown check mode {mode!r}")

        if not verdict.is_equilibrium:
            raise NotAnEquilibrium(
                f"not an equilibrium ({verdict.version.value}): player "
                f"{verdict.witness.player + 1} can improve",
                data={
                    "mode": mode,
                    "version": verdict.version.value,
                    "witness": verdict.witness.to_json(),
                },
            )
        return {"mode": mode, "version": verdict.version.value, "equilibrium": True}

    def run_dynamics(
        self,
        game_path: str,
        init: str = "profile",
        profile_path: Optional[str] = None,
        order: str = "round-robin",
        seed: int = 0,
        rounds: int = DEFAULT_ROUND_LIMIT,
        oracle: str = "exact",
        version: Optional[str] = None,
        cap: int = DEFAULT_CANDIDATE_CAP,
        trace_path: Optional[str] = None,
        meta: Optional[Dict] = None,
    ) -> Dict[str, Any]:
        """Run dynamics from a stored or seeded random profile"""
        spec = self.storage_service.load_game(game_path)
        if init == "profile":
            if not profile_path:
                raise InvalidParameter("--init profile needs --profile")
            initial = self.storage_service.load_profile(profile_path)
        elif init == "random":
            initial = random_profile(spec, np.random.default_rng(seed))
        else:
            raise InvalidParameter(f"unknown initial profile source {init!r}")

        trace = best_response_dynamics(
            spec,
            initial,
            order=OrderPolicy(order),
            seed=seed,
            round_limit=rounds,
            oracle=ResponseMode(oracle),
            version=version,
            cap=cap,
        )
        replayed = replay_trace(trace.initial, trace.moves)
        if replayed.strategies != trace.final.strategies:
            raise CheckFailed("recorded moves do not replay onto the final profile")

        if trace_path:
            self.storage_service.write_trace(trace, trace_path, meta)

        return {
            "outcome": trace.outcome.value,
            "version": trace.version.value,
            "order": trace.order.value,
            "oracle": trace.oracle.value,
            "seed": trace.seed,
            "rounds": trace.rounds,
            "moves": len(trace.moves),
            "cycle_start": trace.cycle_start,
            "cycle_period": trace.cycle_period,
            "initial": trace.initial.to_one_based(),
            "final": trace.final.to_one_based(),
            "trace": trace_path,
        }

    def replay_dynamics(self, game_path: str, trace_path: str) -> Dict[str, Any]:
        """Re-apply a stored trace and confirm it ends on its recorded profile"""
        spec = self.storage_service.load_game(game_path)
        header, moves, result = self.storage_service.read_trace(trace_path)
        if "initial" not in header or "final" not in result:
            raise InvalidGame(f"{trace_path}: trace needs a header and a result line")

        initial = StrategyProfile.from_one_based(header["initial"])
        validate_profile(spec, initial)
        final = replay_trace(initial, moves)
        validate_profile(spec, final)

        recorded = StrategyProfile.from_one_based(result["final"])
        if final != recorded:
            raise CheckFailed(
                "replayed moves end on a different profile than the trace records",
                data={"replayed": final.to_one_based(), "recorded": recorded.to_one_based()},
            )

        logger.info(f"replayed {len(moves)} moves from {trace_path}")
        return {
            "outcome": result.get("outcome"),
            "moves": len(moves),
            "initial": initial.to_one_based(),
            "final": final.to_one_based(),
            "trace": trace_path,
        }

    def enumerate(
        self,
        game_path: str,
        version: Optional[str] = None,
        cap: int = DEFAULT_PROFILE_CAP,
        workers: int = 1,
    ) -> Dict[str, Any]:
        """All equilibria of a tiny game with the PoA/PoS report"""
        spec = self.storage_service.load_game(game_path)
        survey = enumerate_equilibria(spec, version, cap, workers, with_min_diameter=True)
        report = poa_report(survey)

        summary = {
            "version": survey.version.value,
            "profiles_examined": survey.profiles_examined,
            "count": survey.count,
            "min_diameter": survey.min_diameter,
            "max_diameter": survey.max_diameter,
            "all_connected": survey.all_connected,
            "equilibria": [
                {"strategies": profile.to_one_based(), "diameter": value}
                for profile, value in zip(survey.equilibria, survey.diameters)
            ],
            "price_of_anarchy": report.to_json(),
        }
        if spec.total_budget >= spec.n - 1:
            # budgets that can connect everyone only admit connected equilibria
            summary["connectivity_holds"] = survey.all_connected
        return summary

    def search(
        self,
        budget_min: int,
        budget_max: int,
        n_min: int,
        n_max: int,
        runs: int,
        seed: int = 0,
        rounds: int = DEFAULT_ROUND_LIMIT,
        cap: int = DEFAULT_CANDIDATE_CAP,
    ) -> Dict[str, Any]:
        """Largest SUM equilibrium diameter reached by seeded dynamics"""
        found = search_sum_diameter(
            budget_min, budget_max, n_min, n_max, runs, seed, rounds, cap
        )
        return {
            "runs": found.runs,
            "seed": found.seed,
            "equilibria_found": found.equilibria_found,
            "largest_diameter": found.largest_diameter,
            "diameters": {str(d): count for d, count in found.diameters.items()},
            "game": None
            if found.spec is None
            else {"n": found.spec.n, "budgets": list(found.spec.budgets), "version": "sum"},
            "profile": None if found.profile is None else found.profile.to_one_based(),
        }
