"""
Structural validators and measurements on realizations.

Connectivity, cycle structure of unit-budget games, the tree diameter bound,
the expansion profile f(r) = min_u |B_r(u)|, and exhaustive price of anarchy.
"""

import logging
from collections import Counter
from fractions import Fraction
from itertools import combinations
from math import log2
from typing import List, Optional, Tuple

import networkx as nx
import numpy as np

from app.core.config import DEFAULT_CANDIDATE_CAP, DEFAULT_PROFILE_CAP, DEFAULT_ROUND_LIMIT
from app.core.exceptions import (
    Disconnected,
    InvalidGraph,
    InvalidParameter,
    NonUnitBudget,
    NotAnEquilibrium,
    NotATree,
    NotTreeBG,
)
from app.models import (
    ClaimKind,
    ClaimVerdict,
    ConnectivityVerdict,
    ConstructionOutput,
    CostVersion,
    DiameterSearch,
    DynamicsOutcome,
    EquilibriumEnumeration,
    GameSpec,
    PoAReport,
    Provenance,
    StrategyProfile,
    StructureReport,
    TreeBoundVerdict,
)

from .base import strategy_count
from .dynamics import best_response_dynamics
from .equilibria import enumerate_equilibria, is_equilibrium_exact, profile_diameter
from .realization import (
    build_realization,
    diameter,
    random_profile,
    underlying_distances,
    underlying_graph,
)
from .word_graph import (
    deviation_spot_check,
    word_graph_expansion_profile,
    word_graph_local_diameters,
)

logger = logging.getLogger(__name__)

BRUTE_FORCE_LIMIT = 12


# ==================== CONNECTIVITY ====================


def vertex_connectivity(graph: nx.Graph, method: str = "flow") -> int:
    """
    Size of a minimum vertex cut, n - 1 for complete graphs.

    Args:
        graph: simple undirected graph with at least two vertices
        method: "flow" (Menger via max flow) or "brute" (subset removal,
            at most 12 vertices)
    """
    n = graph.number_of_nodes()
    if n < 2:
        raise InvalidGraph(f"vertex connectivity needs at least 2 vertices, got {n}")
    if method == "flow":
        return nx.node_connectivity(graph)
    if method != "brute":
        raise InvalidParameter(f"unknown connectivity method {method!r}")
    if n > BRUTE_FORCE_LIMIT:
        raise InvalidParameter(f"brute-force connectivity is limited to {BRUTE_FORCE_LIMIT} vertices")

    nodes = sorted(graph.nodes)
    for size in range(0, n - 1):
        for removed in combinations(nodes, size):
            rest = graph.subgraph(v for v in nodes if v not in removed)
            if not nx.is_connected(rest):
                return size
    return n - 1


def check_connectivity_theorem(
    spec: GameSpec,
    profile: StrategyProfile,
    verify: bool = True,
    cap: int = DEFAULT_CANDIDATE_CAP,
) -> ConnectivityVerdict:
    """
    SUM equilibria of diameter above 3 are k-connected, k the minimum budget.

    With verify set the profile must pass the exact SUM check first.
    """
    if verify:
        verdict = is_equilibrium_exact(spec, profile, CostVersion.SUM, cap)
        if not verdict.is_equilibrium:
            raise NotAnEquilibrium(
                "profile is not a SUM equilibrium", data=verdict.witness.to_json()
            )

    realization = build_realization(spec, profile)
    measured = diameter(realization)
    min_budget = min(spec.budgets)
    if spec.n < 2:
        return ConnectivityVerdict(holds=True, diameter=measured, connectivity=0, min_budget=min_budget)

    graph = underlying_graph(realization)
    method = "brute" if spec.n <= BRUTE_FORCE_LIMIT else "flow"
    connectivity = vertex_connectivity(graph, method)
    holds = measured <= 3 or connectivity >= min_budget
    if not holds:
        logger.warning(
            f"connectivity predicate fails: diameter {measured}, connectivity {connectivity}, "
            f"min budget {min_budget}"
        )
    return ConnectivityVerdict(
        holds=holds, diameter=measured, connectivity=connectivity, min_budget=min_budget
    )


# ==================== UNIT BUDGETS ====================


def _functional_cycle(strategies) -> List[int]:
    """The cycle reached by following each vertex's single arc from vertex 0"""
    position = {}
    walk = []
    v = 0
    while v not in position:
        position[v] = len(walk)
        walk.append(v)
        v = strategies[v][0]
    cycle = walk[position[v] :]
    start = cycle.index(min(cycle))
    return cycle[start:] + cycle[:start]


def unit_budget_structure(
    spec: GameSpec, profile: StrategyProfile, version: Optional[CostVersion] = None
) -> StructureReport:
    """
    Unique cycle and distance-to-cycle of a connected unit-budget realization.

    Both claims are reported: SUM equilibria have a cycle of at most 5
    vertices with every vertex on it or adjacent to it; MAX equilibria a
    cycle of at most 7 with every vertex within distance 2.
    """
    version = CostVersion(version or spec.version)
    if any(budget != 1 for budget in spec.budgets):
        raise NonUnitBudget(f"all budgets must be 1, got {list(spec.budgets)}")
    realization = build_realization(spec, profile)
    distances = underlying_distances(realization)
    if not distances.connected:
        raise Disconnected(f"underlying graph has {distances.kappa} components")

    cycle = _functional_cycle(profile.strategies)
    reach = max(min(distances.dist[v][c] for c in cycle) for v in range(spec.n))
    length = len(cycle)
    observed = {"cycle_length": length, "max_distance_to_cycle": reach}

    sum_holds = length <= 5 and reach <= 1
    max_holds = length <= 7 and reach <= 2
    verdicts = (
        ClaimVerdict(claim="sum", holds=sum_holds, witness=None if sum_holds else observed),
        ClaimVerdict(claim="max", holds=max_holds, witness=None if max_holds else observed),
    )
    logger.debug(f"unit-budget structure ({version.value}): cycle {length}, reach {reach}")
    return StructureReport(
        cycle=tuple(cycle),
        cycle_length=length,
        max_distance_to_cycle=reach,
        brace_count=len(realization.braces),
        verdicts=verdicts,
    )


# ==================== TREES ====================


def tree_diameter_bound(n: int) -> float:
    return 2 * (log2(n + 1) + 1)


def tree_diameter_bound_check(spec: GameSpec, profile: StrategyProfile) -> TreeBoundVerdict:
    """Diameter of a SUM tree equilibrium is at most 2 (log2(n + 1) + 1)"""
    if spec.total_budget != spec.n - 1:
        raise NotTreeBG(f"budgets sum to {spec.total_budget}, expected {spec.n - 1}")
    realization = build_realization(spec, profile)
    if not nx.is_tree(underlying_graph(realization)):
        raise NotATree("underlying graph is not a tree")

    measured = diameter(realization)
    bound = tree_diameter_bound(spec.n)
    return TreeBoundVerdict(holds=measured <= bound, diameter=measured, bound=bound)


# ==================== EXPANSION ====================


def expansion_profile(graph: nx.Graph) -> List[int]:
    """f(r) for r = 1 .. diameter, f(r) = min over u of |B_r(u)|"""
    n = graph.number_of_nodes()
    if n == 0 or not nx.is_connected(graph):
        raise Disconnected("expansion profile needs a connected graph")

    balls = []
    for source in graph.nodes:
        levels = np.fromiter(
            nx.single_source_shortest_path_length(graph, source).values(), dtype=np.int64
        )
        balls.append(np.cumsum(np.bincount(levels)))

    radius = max(len(sizes) - 1 for sizes in balls)
    return [
        int(min(sizes[r] if r < len(sizes) else n for sizes in balls))
        for r in range(1, radius + 1)
    ]


# ==================== PRICE OF ANARCHY ====================


def price_of_anarchy_exhaustive(
    spec: GameSpec,
    version: Optional[CostVersion] = None,
    cap: int = DEFAULT_PROFILE_CAP,
    workers: int = 1,
) -> PoAReport:
    """Exact PoA and PoS of a tiny game, diameters over every profile"""
    version = CostVersion(version or spec.version)
    return poa_report(
        enumerate_equilibria(spec, version, cap, workers, with_min_diameter=True)
    )


def poa_report(survey: EquilibriumEnumeration) -> PoAReport:
    """PoA and PoS from an enumeration that recorded the minimum diameter"""
    best = survey.min_realization_diameter

    poa = pos = None
    if survey.count:
        if best == 0:
            poa = pos = Fraction(1)
        else:
            poa = Fraction(survey.max_diameter, best)
            pos = Fraction(survey.min_diameter, best)
    else:
        logger.error(f"no equilibrium among {survey.profiles_examined} profiles")

    return PoAReport(
        version=survey.version,
        min_realization_diameter=best,
        min_equilibrium_diameter=survey.min_diameter,
        max_equilibrium_diameter=survey.max_diameter,
        equilibrium_count=survey.count,
        price_of_anarchy=poa,
        price_of_stability=pos,
    )


# ==================== DIAMETER SEARCH ====================


def search_sum_diameter(
    budget_min: int,
    budget_max: int,
    n_min: int,
    n_max: int,
    runs: int,
    seed: int = 0,
    round_limit: int = DEFAULT_ROUND_LIMIT,
    cap: int = DEFAULT_CANDIDATE_CAP,
) -> DiameterSearch:
    """
    Look for large-diameter SUM equilibria with every budget positive.

    Each run draws n and the budgets, starts exact round-robin dynamics from a
    random profile and keeps the result when it ends in an equilibrium.
    """
    if budget_min < 1 or budget_max < budget_min:
        raise InvalidParameter(f"budget range {budget_min}..{budget_max} must be positive")
    if n_min < 2 or n_max < n_min:
        raise InvalidParameter(f"player range {n_min}..{n_max} needs n >= 2")

    rng = np.random.default_rng(seed)
    histogram: Counter = Counter()
    found = 0
    largest = best_spec = best_profile = None

    for run in range(runs):
        n = int(rng.integers(n_min, n_max + 1))
        high = min(budget_max, n - 1)
        low = min(budget_min, high)
        budgets = tuple(int(b) for b in rng.integers(low, high + 1, size=n))
        spec = GameSpec(n=n, budgets=budgets, version=CostVersion.SUM)
        start = random_profile(spec, rng)

        trace = best_response_dynamics(
            spec, start, seed=seed + run, round_limit=round_limit, cap=cap
        )
        if trace.outcome != DynamicsOutcome.EQUILIBRIUM:
            continue
        found += 1
        value, _ = profile_diameter(n, trace.final.strategies)
        histogram[value] += 1
        if largest is None or value > largest:
            largest, best_spec, best_profile = value, spec, trace.final

    logger.info(f"diameter search: {found}/{runs} runs reached equilibrium, largest {largest}")
    return DiameterSearch(
        runs=runs,
        seed=seed,
        equilibria_found=found,
        largest_diameter=largest,
        spec=best_spec,
        profile=best_profile,
        diameters=dict(sorted(histogram.items())),
    )


# ==================== CONSTRUCTION CLAIMS ====================


WORD_GRAPH_FAMILIES = (Provenance.WORD_GRAPH, Provenance.SQRTLOG)


def _exact_check_feasible(spec: GameSpec, cap: int) -> bool:
    # same per-player test is_equilibrium_exact applies before it starts
    return all(strategy_count(spec.n, budget) <= cap for budget in spec.budgets)


def verify_construction(
    output: ConstructionOutput,
    cap: int = DEFAULT_CANDIDATE_CAP,
    samples: int = 0,
    seed: int = 0,
) -> Tuple[List[ClaimVerdict], List[str]]:
    """
    Check the claims a construction carries.

    Word graphs are measured through their symbol-permutation orbits; an
    equilibrium claim is checked exactly only when every player's exhaustive
    best response fits the candidate cap, otherwise it is reported as
    unchecked (and, with samples > 0, spot-checked by random deviations).

    Returns:
        (verdicts, names of claims left unchecked)
    """
    spec = output.spec
    realization = build_realization(spec, output.profile)
    degrees = [len(row) for row in realization.neighbors]
    word_graph = output.provenance in WORD_GRAPH_FAMILIES

    if word_graph:
        t, k = output.details["t"], output.details["k"]
        eccentricities = word_graph_local_diameters(t, k)
        measured = int(eccentricities.max())
        uniform = bool((eccentricities == measured).all())
    else:
        measured = diameter(realization)
        uniform = None

    verdicts: List[ClaimVerdict] = []
    unchecked: List[str] = []
    for claim in output.claims:
        name = claim.kind.value
        if claim.kind == ClaimKind.EQUILIBRIUM:
            for version in claim.versions or (spec.version,):
                label = f"{name}-{version.value}"
                if not _exact_check_feasible(spec, cap):
                    unchecked.append(label)
                    continue
                verdict = is_equilibrium_exact(spec, output.profile, version, cap)
                witness = None if verdict.is_equilibrium else verdict.witness.to_json()
                verdicts.append(
                    ClaimVerdict(claim=label, holds=verdict.is_equilibrium, witness=witness)
                )
        elif claim.kind == ClaimKind.DIAMETER_EQUALS:
            witness = {"diameter": measured}
            holds = measured == claim.value
            if uniform is not None:
                witness["every_local_diameter_equal"] = uniform
                holds = holds and uniform
            verdicts.append(ClaimVerdict(claim=name, holds=holds, witness=witness))
        elif claim.kind == ClaimKind.DIAMETER_AT_MOST:
            holds = measured <= claim.value
            verdicts.append(
                ClaimVerdict(claim=name, holds=holds, witness={"diameter": measured})
            )
        elif claim.kind == ClaimKind.MIN_DEGREE_AT_LEAST:
            low = min(degrees)
            verdicts.append(
                ClaimVerdict(claim=name, holds=low >= claim.value, witness={"min_degree": low})
            )
        elif claim.kind == ClaimKind.MAX_DEGREE_AT_MOST:
            high = max(degrees)
            verdicts.append(
                ClaimVerdict(claim=name, holds=high <= claim.value, witness={"max_degree": high})
            )
        elif claim.kind == ClaimKind.TREE:
            verdicts.append(
                ClaimVerdict(claim=name, holds=nx.is_tree(underlying_graph(realization)))
            )

    if word_graph and samples > 0:
        beaten = deviation_spot_check(output, samples, seed)
        verdicts.append(
            ClaimVerdict(
                claim="deviation-spot-check",
                holds=beaten == 0,
                witness={"samples": samples, "seed": seed, "improving": beaten},
            )
        )
    return verdicts, unchecked


def construction_expansion(output: ConstructionOutput) -> Optional[List[int]]:
    """
    Expansion profile of a construction, logged as a diagnostic.

    Word graphs are swept through their orbits. Returns None when the
    realization is disconnected.
    """
    if output.provenance in WORD_GRAPH_FAMILIES:
        f = word_graph_expansion_profile(output.details["t"], output.details["k"])
    else:
        graph = underlying_graph(build_realization(output.spec, output.profile))
        if not nx.is_connected(graph):
            logger.info(f"{output.provenance.value} n={output.spec.n}: disconnected, no profile")
            return None
        f = expansion_profile(graph)
    logger.info(f"{output.provenance.value} n={output.spec.n}: expansion profile {f}")
    return f
