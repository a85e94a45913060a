#!/usr/bin/env python3
"""
Desk-scale acceptance sweep.

Runs the long property sweeps that the pytest suite keeps behind the slow
marker: constructions in both versions, the tree bound over every Tree-BG
budget shape, unit-budget structure, the word-graph instances with their
expansion profiles, the k-center reduction, the connectivity predicate on
dynamics equilibria and the soundness of the sufficient checker over every
profile up to n = 6. Every SUM equilibrium met along the way at n <= 9 must
have diameter at most n.

Prints one line per sweep and exits 4 if any sweep reports a violation.
"""

import logging
import sys
import time
from itertools import combinations, product
from pathlib import Path

import click
import networkx as nx
import numpy as np

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from app.cli import configure_logging  # noqa: E402
from app.core.exceptions import CHECK_FAILED  # noqa: E402
from app.engine import (  # noqa: E402
    best_response_dynamics,
    brute_force_kcenter,
    build_realization,
    check_connectivity_theorem,
    construct_equilibrium,
    construction_expansion,
    diameter,
    enumerate_equilibria,
    gen_perfect_binary_tree,
    gen_spider,
    gen_sqrtlog_instance,
    gen_word_graph,
    is_equilibrium_exact,
    is_equilibrium_sufficient,
    profile_count,
    random_profile,
    reduce_kcenter,
    solve_by_best_response,
    tree_diameter_bound_check,
    unit_budget_structure,
    verify_construction,
)
from app.models import (  # noqa: E402
    CostVersion,
    DynamicsOutcome,
    GameSpec,
    Provenance,
    StrategyProfile,
    SufficientVerdict,
)

logger = logging.getLogger("budgetnet.acceptance")


def partitions(total: int, parts: int, largest: int):
    """Non-increasing budget vectors of the given length summing to total"""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, largest), -1, -1):
        if first * parts < total:
            break
        for rest in partitions(total - first, parts - 1, first):
            yield (first,) + rest


def budget_shapes(n: int):
    """Every non-increasing budget vector of n players"""
    for total in range(n * (n - 1) + 1):
        yield from partitions(total, n, n - 1)


def diameter_exceeds_n(spec: GameSpec, profile: StrategyProfile) -> int:
    """1 when an equilibrium at n <= 9 has diameter above n"""
    n = spec.n
    # budgets summing below n - 1 cannot connect the players
    if n > 9 or spec.total_budget < n - 1:
        return 0
    value = diameter(build_realization(spec, profile))
    if value <= n:
        return 0
    logger.error(f"{list(spec.budgets)}: equilibrium diameter {value} exceeds n={n}")
    return 1


def sweep_existence(rng, vectors: int) -> int:
    failures = 0
    for _ in range(vectors):
        n = int(rng.integers(1, 10))
        budgets = [int(b) for b in rng.integers(0, n, size=n)]
        output = construct_equilibrium(budgets)
        for version in CostVersion:
            if not is_equilibrium_exact(output.spec, output.profile, version).is_equilibrium:
                logger.error(f"{budgets}: construction is not a {version.value} equilibrium")
                failures += 1
        failures += diameter_exceeds_n(output.spec, output.profile)
        value = diameter(build_realization(output.spec, output.profile))
        limit = {Provenance.THM3_CASE1: 2, Provenance.THM3_CASE2: 4}.get(output.provenance)
        if limit is not None and value > limit:
            logger.error(f"{budgets}: {output.provenance.value} diameter {value} > {limit}")
            failures += 1
    return failures


def sweep_tree_families() -> int:
    failures = 0
    for output in [gen_spider(k) for k in (2, 3, 4)] + [
        gen_perfect_binary_tree(k) for k in (1, 2, 3)
    ]:
        verdicts, _ = verify_construction(output)
        failures += sum(1 for verdict in verdicts if not verdict.holds)
    return failures


def sweep_tree_bound(max_n: int, threads: int) -> int:
    # one non-increasing vector per budget multiset
    failures = 0
    for n in range(2, max_n + 1):
        for budgets in partitions(n - 1, n, n - 1):
            spec = GameSpec.from_budgets(budgets)
            for equilibrium in enumerate_equilibria(spec, workers=threads).equilibria:
                if not tree_diameter_bound_check(spec, equilibrium).holds:
                    logger.error(f"{budgets}: tree bound violated by {equilibrium.to_one_based()}")
                    failures += 1
                failures += diameter_exceeds_n(spec, equilibrium)
    return failures


def sweep_unit_budgets(max_sum: int, max_max: int, threads: int) -> int:
    failures = 0
    for version, max_n in ((CostVersion.SUM, max_sum), (CostVersion.MAX, max_max)):
        for n in range(2, max_n + 1):
            spec = GameSpec.from_budgets([1] * n, version)
            for equilibrium in enumerate_equilibria(spec, workers=threads).equilibria:
                report = unit_budget_structure(spec, equilibrium)
                if not report.verdict(version.value).holds:
                    logger.error(f"n={n} {version.value}: {equilibrium.to_one_based()}")
                    failures += 1
                if version == CostVersion.SUM:
                    failures += diameter_exceeds_n(spec, equilibrium)

    spec = GameSpec.from_budgets([1] * 7)
    cycle = StrategyProfile.of([((v + 1) % 7,) for v in range(7)])
    if is_equilibrium_exact(spec, cycle).is_equilibrium:
        logger.error("directed 7-cycle accepted as a SUM equilibrium")
        failures += 1
    return failures


def sweep_word_graphs(samples: int, seed: int, with_sqrtlog: bool) -> int:
    outputs = [gen_word_graph(9, 4)]
    if with_sqrtlog:
        outputs.append(gen_sqrtlog_instance(4))
    failures = 0
    for output in outputs:
        verdicts, unchecked = verify_construction(output, samples=samples, seed=seed)
        logger.info(f"{output.provenance.value} n={output.spec.n}: unchecked {unchecked}")
        construction_expansion(output)
        failures += sum(1 for verdict in verdicts if not verdict.holds)
    return failures


def sweep_kcenter(rng, graphs: int) -> int:
    failures = done = 0
    while done < graphs:
        n = int(rng.integers(2, 9))
        graph = nx.gnp_random_graph(n, 0.4, seed=int(rng.integers(1 << 31)))
        if not nx.is_connected(graph):
            continue
        k = int(rng.integers(1, min(3, n) + 1))
        done += 1
        found = solve_by_best_response(reduce_kcenter(graph, k)).value
        expected = brute_force_kcenter(graph, k).value
        if found != expected:
            logger.error(f"k={k} on {sorted(graph.edges)}: {found} != {expected}")
            failures += 1
    return failures


def sweep_connectivity(rng, wanted: int, seed: int) -> int:
    failures = found = attempts = 0
    while found < wanted and attempts < 20 * wanted:
        attempts += 1
        n = int(rng.integers(4, 9))
        budgets = [int(b) for b in rng.integers(2, n, size=n)]
        spec = GameSpec.from_budgets(budgets)
        start = random_profile(spec, rng)
        trace = best_response_dynamics(spec, start, seed=seed + attempts, round_limit=100)
        if trace.outcome != DynamicsOutcome.EQUILIBRIUM:
            continue
        found += 1
        if not check_connectivity_theorem(spec, trace.final).holds:
            failures += 1
        failures += diameter_exceeds_n(spec, trace.final)
    if found < wanted:
        logger.warning(f"only {found} of {wanted} runs reached an equilibrium")
    return failures


def sweep_sufficient(max_n: int, profile_limit: int) -> int:
    # shapes cover every game up to relabeling the players
    failures = skipped = 0
    for n in range(1, max_n + 1):
        for budgets in budget_shapes(n):
            spec = GameSpec.from_budgets(budgets)
            if profile_count(spec) > profile_limit:
                skipped += 1
                continue
            options = [
                combinations([v for v in range(n) if v != player], budget)
                for player, budget in enumerate(budgets)
            ]
            for strategies in product(*options):
                profile = StrategyProfile.of(strategies)
                if is_equilibrium_sufficient(spec, profile) != SufficientVerdict.PROVEN:
                    continue
                for version in CostVersion:
                    if not is_equilibrium_exact(spec, profile, version).is_equilibrium:
                        logger.error(f"proven but not an equilibrium: {profile.to_one_based()}")
                        failures += 1
    if skipped:
        logger.warning(f"{skipped} budget shapes exceed {profile_limit} profiles and were skipped")
    return failures


@click.command()
@click.option("--seed", type=int, default=0)
@click.option("--threads", type=int, default=1)
@click.option("--quick", is_flag=True, help="Smaller sweeps, skip the 65536-vertex instance")
def main(seed, threads, quick):
    """Run every acceptance sweep and report violations"""
    configure_logging()
    rng = np.random.default_rng(seed)

    sweeps = [
        ("existence", lambda: sweep_existence(rng, 40 if quick else 200)),
        ("tree families", sweep_tree_families),
        ("tree bound", lambda: sweep_tree_bound(5 if quick else 7, threads)),
        ("unit budgets", lambda: sweep_unit_budgets(5 if quick else 7, 5 if quick else 6, threads)),
        ("k-center", lambda: sweep_kcenter(rng, 50)),
        ("connectivity", lambda: sweep_connectivity(rng, 30 if quick else 100, seed)),
        ("sufficient checker", lambda: sweep_sufficient(5 if quick else 6, 10**6)),
        ("word graphs", lambda: sweep_word_graphs(100 if quick else 1000, seed, not quick)),
    ]

    print("=" * 70)
    print("Acceptance sweep")
    print("=" * 70 + "\n")

    total = 0
    for name, sweep in sweeps:
        started = time.perf_counter()
        failures = sweep()
        elapsed = time.perf_counter() - started
        mark = "✅" if failures == 0 else "❌"
        print(f"  {mark} {name:<20} {failures} violations ({elapsed:.1f}s)")
        total += failures

    print("\n" + "=" * 70)
    print("✅ All sweeps passed" if total == 0 else f"❌ {total} violations")
    print("=" * 70)
    sys.exit(0 if total == 0 else CHECK_FAILED)


if __name__ == "__main__":
    main()
