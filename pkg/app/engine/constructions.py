"""
Deterministic equilibrium constructions.

construct_equilibrium follows the three-case existence proof; the spider and
the perfect binary tree are the Tree-BG families with large equilibrium
diameter in the MAX and SUM versions.
"""

import logging
from typing import Dict, List, Sequence, Set, Tuple

import networkx as nx

from app.core.exceptions import InvalidParameter
from app.models import (
    Claim,
    ClaimKind,
    ConstructionOutput,
    CostVersion,
    GameSpec,
    Provenance,
    StrategyProfile,
)

from .base import eccentricity, strategy_graph

logger = logging.getLogger(__name__)

BOTH_VERSIONS = (CostVersion.SUM, CostVersion.MAX)


class _ArcSet:
    """Mutable arc sets used while a construction is being assembled"""

    def __init__(self, n: int):
        self.n = n
        self.out: List[Set[int]] = [set() for _ in range(n)]

    def add(self, owner: int, target: int) -> None:
        assert owner != target and target not in self.out[owner]
        self.out[owner].add(target)

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.out[u] or u in self.out[v]

    def in_degree(self, v: int) -> int:
        return sum(1 for owner in range(self.n) if v in self.out[owner])

    def graph(self) -> nx.Graph:
        return strategy_graph(self.n, self.out)

    def local_diameter(self, u: int) -> int:
        return eccentricity(self.graph(), u)

    def braces(self) -> List[Tuple[int, int]]:
        return sorted(
            (u, v) for u in range(self.n) for v in self.out[u] if u < v and u in self.out[v]
        )

    def strategies(self) -> List[Tuple[int, ...]]:
        return [tuple(sorted(targets)) for targets in self.out]


# ==================== EXISTENCE CONSTRUCTION ====================


def _case1(b: Sequence[int]) -> Tuple[List[Tuple[int, ...]], Dict]:
    """Star on the largest budget, arbitrary fill, then brace elimination"""
    n = len(b)
    arcs = _ArcSet(n)
    hub = n - 1

    for target in range(b[hub]):
        arcs.add(hub, target)
    for owner in range(b[hub], n - 1):
        arcs.add(owner, hub)

    for u in range(n):
        while len(arcs.out[u]) < b[u]:
            free = [w for w in range(n) if w != u and not arcs.adjacent(u, w)]
            if not free:
                free = [w for w in range(n) if w != u and w not in arcs.out[u]]
            arcs.add(u, free[0])

    replacements = 0
    changed = True
    while changed:
        changed = False
        for x, y in arcs.braces():
            for u, v in ((x, y), (y, x)):
                if arcs.local_diameter(u) != 2:
                    continue
                free = [w for w in range(n) if w != u and not arcs.adjacent(u, w)]
                if not free:
                    continue
                arcs.out[u].remove(v)
                arcs.add(u, free[0])
                replacements += 1
                changed = True
                break
            if changed:
                break

    return arcs.strategies(), {"brace_replacements": replacements}


def _case2(b: Sequence[int]) -> Tuple[List[Tuple[int, ...]], Dict]:
    """Several connectors share the zero-budget vertices; four phases"""
    n = len(b)
    z = sum(1 for budget in b if budget == 0)
    hub = n - 1

    # largest (0-based) index T whose suffix budget covers z + n - (T + 1)
    top = next(T for T in range(n - 1, z - 1, -1) if sum(b[T:]) >= z + n - (T + 1))
    group_a = list(range(z))
    group_b = list(range(z, top + 1))
    group_c = list(range(top + 1, n - 1))
    arcs = _ArcSet(n)

    # phase 1: B and C link to the hub
    for u in group_b + group_c:
        arcs.add(u, hub)

    # phase 2: hub, C (descending) and v_t split A between them
    counts = [b[hub]]
    cursor = 0
    for target in group_a[: b[hub]]:
        arcs.add(hub, target)
    cursor = b[hub]
    for c in reversed(group_c):
        count = b[c] - 1
        for target in group_a[cursor : cursor + count]:
            arcs.add(c, target)
        cursor += count
        counts.append(count)
    s = z + n - (top + 2) - sum(b[top + 1 :])
    assert s > 0 and cursor == z - s, "connectors must tile the zero-budget vertices"
    for target in group_a[z - s :]:
        arcs.add(top, target)
    counts.append(s)
    assert all(arcs.in_degree(x) == 1 for x in group_a), "A needs one incoming arc each"

    # phase 3: B links to C and v_t in reverse order
    for u in group_b:
        for target in range(n - 2, top - 1, -1):
            if len(arcs.out[u]) >= b[u]:
                break
            if target != u and target not in arcs.out[u]:
                arcs.add(u, target)

    # phase 4: B fills up with A in order
    for u in group_b:
        for target in group_a:
            if len(arcs.out[u]) >= b[u]:
                break
            if target not in arcs.out[u]:
                arcs.add(u, target)
        assert len(arcs.out[u]) == b[u], f"vertex {u + 1} could not spend its budget"

    for c in group_c:
        for x in arcs.out[c]:
            if x < z:
                assert list(arcs.graph()[x]) == [c], "an A vertex reached from C must be a leaf"
    assert not arcs.braces(), "the construction creates no brace"

    details = {
        "z": z,
        "t": top + 1,
        "s": s,
        "phase2_counts": counts,
        "A": [v + 1 for v in group_a],
        "B": [v + 1 for v in group_b],
        "C": [v + 1 for v in group_c],
    }
    return arcs.strategies(), details


def _build_sorted(b: Sequence[int]) -> Tuple[List[Tuple[int, ...]], Provenance, Dict]:
    """Equilibrium for budgets sorted ascending, in sorted positions"""
    n = len(b)
    if n == 1:
        return [()], Provenance.THM3_CASE1, {}

    sigma = sum(b)
    z = sum(1 for budget in b if budget == 0)

    if sigma < n - 1:
        # smallest (0-based) M whose suffix budget reaches n - M - 1
        first = next(M for M in range(n) if sum(b[M:]) >= n - M - 1)
        sub, sub_provenance, sub_details = _build_sorted(b[first:])
        strategies = [()] * first + [
            tuple(target + first for target in targets) for targets in sub
        ]
        details = {
            "m": first + 1,
            "sub_case": sub_provenance.value,
            "sub_details": sub_details,
        }
        return strategies, Provenance.THM3_CASE3, details

    if b[-1] >= z:
        strategies, details = _case1(b)
        return strategies, Provenance.THM3_CASE1, details

    strategies, details = _case2(b)
    return strategies, Provenance.THM3_CASE2, details


def construct_equilibrium(
    budgets: Sequence[int], version: CostVersion = CostVersion.SUM
) -> ConstructionOutput:
    """
    Build an equilibrium for any budget vector.

    Budgets are sorted ascending internally; `permutation[i]` is the original
    player at sorted position i and the returned profile uses original
    player identities.
    """
    spec = GameSpec.from_budgets(budgets, version)
    n = spec.n
    order = sorted(range(n), key=lambda player: (spec.budgets[player], player))
    sorted_budgets = [spec.budgets[player] for player in order]

    sorted_strategies, provenance, details = _build_sorted(sorted_budgets)

    strategies: List[Tuple[int, ...]] = [()] * n
    for position, targets in enumerate(sorted_strategies):
        strategies[order[position]] = tuple(sorted(order[t] for t in targets))

    claims = [Claim(kind=ClaimKind.EQUILIBRIUM, versions=BOTH_VERSIONS)]
    if provenance == Provenance.THM3_CASE1:
        claims.append(Claim(kind=ClaimKind.DIAMETER_AT_MOST, value=2))
    elif provenance == Provenance.THM3_CASE2:
        claims.append(Claim(kind=ClaimKind.DIAMETER_AT_MOST, value=4))
    else:
        claims.append(Claim(kind=ClaimKind.DIAMETER_EQUALS, value=n * n))

    logger.info(f"built {provenance.value} equilibrium for n={n}")
    return ConstructionOutput(
        spec=spec,
        profile=StrategyProfile.of(strategies),
        provenance=provenance,
        claims=tuple(claims),
        permutation=tuple(order),
        details=details,
    )


# ==================== TREE FAMILIES ====================


def _from_arcs(
    n: int, arcs: Sequence[Tuple[int, int]], version: CostVersion
) -> Tuple[GameSpec, StrategyProfile]:
    out = [[] for _ in range(n)]
    for owner, target in arcs:
        out[owner].append(target)
    spec = GameSpec(n=n, budgets=tuple(len(targets) for targets in out), version=version)
    return spec, StrategyProfile.of(out)


def gen_spider(k: int) -> ConstructionOutput:
    """Three directed paths of length k hanging off a zero-budget center w"""
    if k < 1:
        raise InvalidParameter(f"spider needs k >= 1, got {k}")

    n = 3 * k + 1
    center = 3 * k
    arcs = []
    labels = []
    for leg, name in enumerate("xyz"):
        base = leg * k
        labels.extend(f"{name}{i}" for i in range(1, k + 1))
        arcs.extend((base + i, base + i + 1) for i in range(k - 1))
        arcs.append((base, center))
    labels.append("w")

    spec, profile = _from_arcs(n, arcs, CostVersion.MAX)
    return ConstructionOutput(
        spec=spec,
        profile=profile,
        provenance=Provenance.SPIDER,
        claims=(
            Claim(kind=ClaimKind.EQUILIBRIUM, versions=(CostVersion.MAX,)),
            Claim(kind=ClaimKind.DIAMETER_EQUALS, value=2 * k),
            Claim(kind=ClaimKind.TREE),
        ),
        labels=tuple(labels),
        details={"k": k},
    )


def gen_perfect_binary_tree(k: int) -> ConstructionOutput:
    """Vertex i links to 2i and 2i + 1 (1-based) below n / 2"""
    if k < 1:
        raise InvalidParameter(f"binary tree needs k >= 1, got {k}")

    n = 2 ** (k + 1) - 1
    arcs = []
    for parent in range(1, n + 1):
        if 2 * parent + 1 > n:
            break
        arcs.append((parent - 1, 2 * parent - 1))
        arcs.append((parent - 1, 2 * parent))

    spec, profile = _from_arcs(n, arcs, CostVersion.SUM)
    return ConstructionOutput(
        spec=spec,
        profile=profile,
        provenance=Provenance.BINARY_TREE,
        claims=(
            Claim(kind=ClaimKind.EQUILIBRIUM, versions=(CostVersion.SUM,)),
            Claim(kind=ClaimKind.DIAMETER_EQUALS, value=2 * k),
            Claim(kind=ClaimKind.TREE),
        ),
        details={"k": k},
    )
