"""
Equilibrium checks and exhaustive enumeration.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations, product
from math import prod
from typing import List, Optional, Sequence, Tuple

import networkx as nx

from app.core.config import DEFAULT_CANDIDATE_CAP, DEFAULT_PROFILE_CAP
from app.models import (
    CostVersion,
    EquilibriumEnumeration,
    EquilibriumVerdict,
    GameSpec,
    StrategyProfile,
    SufficientVerdict,
    Witness,
)

from .base import ensure_within_cap, strategy_count, strategy_graph
from .best_response import exact_response, first_swap_improvement
from .realization import (
    build_realization,
    local_diameter,
    underlying_distances,
    validate_profile,
)

logger = logging.getLogger(__name__)


def _first_deviation(
    n: int,
    budgets: Sequence[int],
    strategies: Sequence[Sequence[int]],
    version: CostVersion,
) -> Optional[Witness]:
    for player, budget in enumerate(budgets):
        # a single feasible strategy leaves nothing to deviate to
        if budget == 0 or budget == n - 1:
            continue
        strategy, value, current_cost, _ = exact_response(
            n, strategies, player, budget, version
        )
        if value < current_cost:
            return Witness(
                player=player, strategy=strategy, old_cost=current_cost, new_cost=value
            )
    return None


def is_equilibrium_exact(
    spec: GameSpec,
    profile: StrategyProfile,
    version: Optional[CostVersion] = None,
    cap: int = DEFAULT_CANDIDATE_CAP,
) -> EquilibriumVerdict:
    """No player has a strictly improving strategy; otherwise a witness"""
    validate_profile(spec, profile)
    version = CostVersion(version or spec.version)
    for player, budget in enumerate(spec.budgets):
        ensure_within_cap(
            strategy_count(spec.n, budget), cap, f"best response of player {player + 1}"
        )

    witness = _first_deviation(spec.n, spec.budgets, profile.strategies, version)
    if witness is not None:
        logger.info(
            f"not an equilibrium ({version.value}): player {witness.player + 1} "
            f"improves {witness.old_cost} -> {witness.new_cost}"
        )
    return EquilibriumVerdict(
        is_equilibrium=witness is None, version=version, witness=witness
    )


def is_swap_equilibrium(
    spec: GameSpec,
    profile: StrategyProfile,
    version: Optional[CostVersion] = None,
) -> EquilibriumVerdict:
    """No single-arc swap strictly improves any player"""
    validate_profile(spec, profile)
    version = CostVersion(version or spec.version)
    for player in range(spec.n):
        witness = first_swap_improvement(spec.n, profile.strategies, player, version)
        if witness is not None:
            return EquilibriumVerdict(
                is_equilibrium=False, version=version, witness=witness
            )
    return EquilibriumVerdict(is_equilibrium=True, version=version)


def is_equilibrium_sufficient(
    spec: GameSpec, profile: StrategyProfile
) -> SufficientVerdict:
    """
    Sufficient condition for equilibrium in both versions.

    Every vertex must have budget 0, local diameter 1, or local diameter at
    most 2 without belonging to a brace.
    """
    realization = build_realization(spec, profile)
    distances = underlying_distances(realization)
    for player, budget in enumerate(spec.budgets):
        if budget == 0:
            continue
        reach = local_diameter(realization, player, distances)
        if reach == 1:
            continue
        if reach <= 2 and not realization.in_brace(player):
            continue
        logger.debug(f"player {player + 1} fails the sufficient condition (reach {reach})")
        return SufficientVerdict.INCONCLUSIVE
    return SufficientVerdict.PROVEN


def profile_diameter(n: int, strategies: Sequence[Sequence[int]]) -> Tuple[int, bool]:
    """(diameter, connected) of the underlying graph of raw strategies"""
    graph = strategy_graph(n, strategies)
    if not nx.is_connected(graph):
        return n * n, False
    return nx.diameter(graph), True


def profile_count(spec: GameSpec) -> int:
    return prod(strategy_count(spec.n, budget) for budget in spec.budgets)


def _strategy_options(spec: GameSpec) -> List[List[Tuple[int, ...]]]:
    return [
        list(combinations([v for v in range(spec.n) if v != player], budget))
        for player, budget in enumerate(spec.budgets)
    ]


def _survey_chunk(
    n: int,
    budgets: Tuple[int, ...],
    options: List[List[Tuple[int, ...]]],
    version: CostVersion,
    with_min_diameter: bool,
):
    """Scan every profile of the given option lists"""
    examined = 0
    equilibria = []
    diameters = []
    all_connected = True
    min_diameter = None
    for strategies in product(*options):
        examined += 1
        if with_min_diameter:
            value, _ = profile_diameter(n, strategies)
            if min_diameter is None or value < min_diameter:
                min_diameter = value
        if _first_deviation(n, budgets, strategies, version) is None:
            value, connected = profile_diameter(n, strategies)
            equilibria.append(strategies)
            diameters.append(value)
            all_connected = all_connected and connected
    return examined, equilibria, diameters, all_connected, min_diameter


def enumerate_equilibria(
    spec: GameSpec,
    version: Optional[CostVersion] = None,
    cap: int = DEFAULT_PROFILE_CAP,
    workers: int = 1,
    with_min_diameter: bool = False,
) -> EquilibriumEnumeration:
    """
    Every profile passing the exact check, in canonical product order.

    Args:
        spec: game to enumerate
        version: cost version, defaults to the game's
        cap: maximum number of profiles
        workers: worker processes; the split is by the first player's
            strategy so results are merged in canonical order
        with_min_diameter: also record the minimum diameter over all
            realizations (needed for the price of anarchy)
    """
    version = CostVersion(version or spec.version)
    ensure_within_cap(profile_count(spec), cap, "profile enumeration")

    options = _strategy_options(spec)
    logger.info(
        f"enumerating {profile_count(spec)} profiles of n={spec.n} "
        f"budgets={list(spec.budgets)} ({version.value})"
    )

    if workers > 1 and len(options[0]) > 1:
        chunks = [[[first]] + options[1:] for first in options[0]]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(
                pool.map(
                    _survey_chunk,
                    [spec.n] * len(chunks),
                    [spec.budgets] * len(chunks),
                    chunks,
                    [version] * len(chunks),
                    [with_min_diameter] * len(chunks),
                )
            )
    else:
        results = [_survey_chunk(spec.n, spec.budgets, options, version, with_min_diameter)]

    examined = 0
    equilibria = []
    diameters = []
    all_connected = True
    min_diameter = None
    for chunk_examined, chunk_eq, chunk_diam, chunk_connected, chunk_min in results:
        examined += chunk_examined
        equilibria.extend(chunk_eq)
        diameters.extend(chunk_diam)
        all_connected = all_connected and chunk_connected
        if chunk_min is not None and (min_diameter is None or chunk_min < min_diameter):
            min_diameter = chunk_min

    logger.info(f"found {len(equilibria)} equilibria among {examined} profiles")
    return EquilibriumEnumeration(
        version=version,
        profiles_examined=examined,
        equilibria=tuple(StrategyProfile.of(strategies) for strategies in equilibria),
        diameters=tuple(diameters),
        min_realization_diameter=min_diameter,
        all_connected=all_connected,
    )
