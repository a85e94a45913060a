"""
Best-response dynamics with cycle detection.

Only strictly improving moves are applied. A round gives every player one
turn, either in index order or in a seeded random order.
"""

import hashlib
import logging
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from app.core.config import DEFAULT_CANDIDATE_CAP, DEFAULT_ROUND_LIMIT
from app.core.exceptions import InvalidGame
from app.models import (
    CostVersion,
    DynamicsOutcome,
    DynamicsTrace,
    GameSpec,
    Move,
    OrderPolicy,
    ResponseMode,
    StrategyProfile,
)

from .base import ensure_within_cap, strategy_count
from .best_response import exact_response, swap_response
from .realization import validate_profile

logger = logging.getLogger(__name__)


def profile_digest(strategies: Sequence[Sequence[int]]) -> str:
    """Canonical hash of a profile (targets sorted per player)"""
    canonical = ";".join(",".join(str(t) for t in sorted(targets)) for targets in strategies)
    return hashlib.blake2b(canonical.encode("ascii"), digest_size=16).hexdigest()


class _ProfileHistory:
    """Seen profiles keyed by digest, confirmed by full comparison on a hit"""

    def __init__(self):
        self._seen: Dict[str, List[Tuple[int, Tuple[Tuple[int, ...], ...]]]] = {}

    def record(self, index: int, strategies: Tuple[Tuple[int, ...], ...]) -> Optional[int]:
        """Store the profile; return the index of an identical earlier one"""
        bucket = self._seen.setdefault(profile_digest(strategies), [])
        for earlier, seen in bucket:
            if seen == strategies:
                return earlier
        bucket.append((index, strategies))
        return None


def best_response_dynamics(
    spec: GameSpec,
    initial: StrategyProfile,
    order: OrderPolicy = OrderPolicy.ROUND_ROBIN,
    seed: int = 0,
    round_limit: int = DEFAULT_ROUND_LIMIT,
    oracle: ResponseMode = ResponseMode.EXACT,
    version: Optional[CostVersion] = None,
    cap: int = DEFAULT_CANDIDATE_CAP,
) -> DynamicsTrace:
    """
    Run best-response dynamics from an initial profile.

    Terminates on a silent full round (equilibrium, or swap-stable for the
    swap oracle), on a repeated profile, or when the round limit is reached.
    Deterministic for a fixed seed and order policy.
    """
    validate_profile(spec, initial)
    version = CostVersion(version or spec.version)
    order = OrderPolicy(order)
    oracle = ResponseMode(oracle)
    if round_limit < 0:
        raise InvalidGame(f"round limit must be nonnegative, got {round_limit}")
    if oracle == ResponseMode.EXACT:
        for player, budget in enumerate(spec.budgets):
            ensure_within_cap(
                strategy_count(spec.n, budget), cap, f"best response of player {player + 1}"
            )

    rng = np.random.default_rng(seed)
    strategies = list(initial.strategies)
    history = _ProfileHistory()
    # index i refers to the profile after i moves
    history.record(0, tuple(strategies))

    moves: List[Move] = []
    outcome = DynamicsOutcome.ROUND_LIMIT
    cycle_start = cycle_period = None
    rounds = 0

    while rounds < round_limit and outcome == DynamicsOutcome.ROUND_LIMIT:
        rounds += 1
        if order == OrderPolicy.RANDOM:
            schedule = [int(p) for p in rng.permutation(spec.n)]
        else:
            schedule = list(range(spec.n))

        moved = False
        for player in schedule:
            budget = spec.budgets[player]
            if budget == 0 or budget == spec.n - 1:
                continue
            if oracle == ResponseMode.EXACT:
                strategy, value, current_cost, _ = exact_response(
                    spec.n, strategies, player, budget, version
                )
            else:
                strategy, value, current_cost, _ = swap_response(
                    spec.n, strategies, player, version
                )
            if value >= current_cost:
                continue

            moves.append(
                Move(
                    round=rounds,
                    player=player,
                    old_strategy=tuple(strategies[player]),
                    new_strategy=tuple(strategy),
                    old_cost=current_cost,
                    new_cost=value,
                )
            )
            strategies[player] = tuple(strategy)
            moved = True

            earlier = history.record(len(moves), tuple(strategies))
            if earlier is not None:
                outcome = DynamicsOutcome.CYCLE_DETECTED
                cycle_start = earlier
                cycle_period = len(moves) - earlier
                break

        if outcome == DynamicsOutcome.ROUND_LIMIT and not moved:
            outcome = (
                DynamicsOutcome.EQUILIBRIUM
                if oracle == ResponseMode.EXACT
                else DynamicsOutcome.SWAP_STABLE
            )

    logger.info(
        f"dynamics ({version.value}, {order.value}, {oracle.value}, seed {seed}): "
        f"{outcome.value} after {rounds} rounds and {len(moves)} moves"
    )
    return DynamicsTrace(
        version=version,
        order=order,
        oracle=oracle,
        seed=seed,
        round_limit=round_limit,
        rounds=rounds,
        initial=initial,
        final=StrategyProfile.of(strategies),
        moves=tuple(moves),
        outcome=outcome,
        cycle_start=cycle_start,
        cycle_period=cycle_period,
    )


def replay_trace(initial: StrategyProfile, moves: Sequence[Move]) -> StrategyProfile:
    """Re-apply recorded moves; each move must start from the recorded strategy"""
    strategies = list(initial.strategies)
    for index, move in enumerate(moves):
        if tuple(strategies[move.player]) != tuple(move.old_strategy):
            raise InvalidGame(
                f"move {index + 1} expects player {move.player + 1} to play "
                f"{[t + 1 for t in move.old_strategy]}"
            )
        strategies[move.player] = tuple(move.new_strategy)
    return StrategyProfile.of(strategies)
