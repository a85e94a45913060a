"""
Game engine

Costs, best responses, equilibrium checks, dynamics, constructions and the
structural analyses. Every function takes and returns app.models objects
with 0-based player indices.
"""

from .analysis import (
    check_connectivity_theorem,
    construction_expansion,
    expansion_profile,
    poa_report,
    price_of_anarchy_exhaustive,
    search_sum_diameter,
    tree_diameter_bound,
    tree_diameter_bound_check,
    unit_budget_structure,
    verify_construction,
    vertex_connectivity,
)
from .best_response import (
    DeviationEvaluator,
    best_response_exact,
    best_response_swap,
)
from .constructions import construct_equilibrium, gen_perfect_binary_tree, gen_spider
from .dynamics import best_response_dynamics, profile_digest, replay_trace
from .equilibria import (
    enumerate_equilibria,
    is_equilibrium_exact,
    is_equilibrium_sufficient,
    is_swap_equilibrium,
    profile_count,
    profile_diameter,
)
from .kcenter import (
    brute_force_kcenter,
    brute_force_kmedian,
    reduce_kcenter,
    solve_by_best_response,
)
from .realization import (
    build_realization,
    cost,
    cost_report,
    diameter,
    local_diameter,
    random_profile,
    underlying_distances,
    underlying_graph,
    validate_profile,
)
from .word_graph import (
    counting_condition,
    decode_word,
    deviation_spot_check,
    encode_word,
    gen_sqrtlog_instance,
    gen_word_graph,
    word_graph_edges,
    word_graph_expansion_profile,
    word_graph_local_diameters,
    word_graph_neighbors,
)

__all__ = [
    "build_realization",
    "validate_profile",
    "underlying_distances",
    "underlying_graph",
    "cost",
    "cost_report",
    "diameter",
    "local_diameter",
    "random_profile",
    "DeviationEvaluator",
    "best_response_exact",
    "best_response_swap",
    "is_equilibrium_exact",
    "is_equilibrium_sufficient",
    "is_swap_equilibrium",
    "enumerate_equilibria",
    "profile_count",
    "profile_diameter",
    "best_response_dynamics",
    "replay_trace",
    "profile_digest",
    "construct_equilibrium",
    "gen_spider",
    "gen_perfect_binary_tree",
    "gen_word_graph",
    "gen_sqrtlog_instance",
    "word_graph_edges",
    "word_graph_neighbors",
    "word_graph_local_diameters",
    "word_graph_expansion_profile",
    "encode_word",
    "decode_word",
    "counting_condition",
    "deviation_spot_check",
    "vertex_connectivity",
    "check_connectivity_theorem",
    "unit_budget_structure",
    "verify_construction",
    "construction_expansion",
    "tree_diameter_bound",
    "tree_diameter_bound_check",
    "expansion_profile",
    "price_of_anarchy_exhaustive",
    "poa_report",
    "search_sum_diameter",
    "reduce_kcenter",
    "solve_by_best_response",
    "brute_force_kcenter",
    "brute_force_kmedian",
]
