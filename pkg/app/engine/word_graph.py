"""
Word graphs on {1..t}^k and the sqrt(log n) diameter family.

Two words are adjacent when one is a one-step shift of the other:
(x1, ..., xk) ~ (a, x1, ..., x(k-1)) for every symbol a. Vertices are
indexed in mixed radix with x1 the most significant digit.

Permuting the symbols {1..t} uniformly in every coordinate maps the graph
onto itself, so distances from one word per orbit determine the local
diameter and ball sizes of every vertex.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from app.core.config import DEFAULT_VERTEX_CAP
from app.core.exceptions import (
    CheckFailed,
    ConditionViolated,
    InvalidParameter,
    ResourceBound,
)
from app.models import (
    Claim,
    ClaimKind,
    ConstructionOutput,
    CostVersion,
    GameSpec,
    Provenance,
    StrategyProfile,
)

from .base import UNREACHED, ball_covers, strategy_graph

logger = logging.getLogger(__name__)


# ==================== ENCODING ====================


def counting_condition(n: int, d: int, delta: int) -> bool:
    """delta ** d - 1 < n * (delta - 1): too few vertices for diameter d - 1 balls"""
    return delta**d - 1 < n * (delta - 1)


def encode_word(t: int, word: Sequence[int]) -> int:
    """Mixed-radix index of a word over 1..t"""
    index = 0
    for symbol in word:
        if symbol < 1 or symbol > t:
            raise InvalidParameter(f"symbol {symbol} outside 1..{t}")
        index = index * t + (symbol - 1)
    return index


def decode_word(t: int, k: int, index: int) -> Tuple[int, ...]:
    digits = []
    for _ in range(k):
        index, digit = divmod(index, t)
        digits.append(digit + 1)
    return tuple(reversed(digits))


def word_label(t: int, k: int, index: int) -> str:
    return "(" + ",".join(str(s) for s in decode_word(t, k, index)) + ")"


def word_graph_neighbors(t: int, k: int, index: int) -> List[int]:
    """Distinct neighbors of a vertex, ascending, without the vertex itself"""
    high = t ** (k - 1)
    found = set()
    for a in range(t):
        found.add(a * high + index // t)
        found.add((index % high) * t + a)
    found.discard(index)
    return sorted(found)


# ==================== EDGES AND ORIENTATION ====================


def word_graph_edges(t: int, k: int) -> np.ndarray:
    """
    Simple edge list of the word graph, one (low, high) row per edge.

    Every edge arises as a right shift of its lower or higher endpoint, so
    right shifts alone enumerate all of them. Rows come out sorted.
    """
    n = t**k
    high = t ** (k - 1)
    index = np.arange(n, dtype=np.int64)
    symbols = np.arange(t, dtype=np.int64)

    shifted = (index % high)[:, None] * t + symbols[None, :]
    sources = np.broadcast_to(index[:, None], shifted.shape)
    low = np.minimum(sources, shifted).ravel()
    top = np.maximum(sources, shifted).ravel()
    keep = low != top

    keys = np.unique(low[keep] * n + top[keep])
    return np.stack((keys // n, keys % n), axis=1)


def orient_edges(n: int, edges: np.ndarray) -> Tuple[np.ndarray, np.ndarray, int]:
    """
    Orient every edge so each vertex owns at least one arc.

    Edges start oriented low -> high. A vertex left without an arc takes over
    one incident arc, smallest neighbor first, preferring a neighbor that
    keeps an arc of its own; otherwise the neighbor joins the worklist.

    Returns:
        (owners, targets, number of flips)
    """
    owners = edges[:, 0].copy()
    targets = edges[:, 1].copy()
    out_degree = np.bincount(owners, minlength=n)

    worklist = [int(v) for v in np.flatnonzero(out_degree == 0)]
    flips = 0
    while worklist:
        v = worklist.pop(0)
        if out_degree[v] > 0:
            continue
        incoming = np.flatnonzero(targets == v)
        if incoming.size == 0:
            raise CheckFailed(f"vertex {v + 1} has no incident edge to orient")
        incoming = incoming[np.argsort(owners[incoming], kind="stable")]
        rich = [e for e in incoming if out_degree[owners[e]] >= 2]
        edge = int(rich[0]) if rich else int(incoming[0])

        u = int(owners[edge])
        owners[edge], targets[edge] = v, u
        out_degree[u] -= 1
        out_degree[v] += 1
        flips += 1
        if out_degree[u] == 0:
            worklist.append(u)
        if flips > len(edges):
            raise CheckFailed("orientation did not settle; no arc-owning orientation found")

    return owners, targets, flips


def _strategies_from_arcs(
    n: int, owners: np.ndarray, targets: np.ndarray
) -> List[Tuple[int, ...]]:
    order = np.lexsort((targets, owners))
    counts = np.bincount(owners, minlength=n)
    chunks = np.split(targets[order], np.cumsum(counts)[:-1])
    return [tuple(chunk.tolist()) for chunk in chunks]


# ==================== DISTANCES ====================


def word_graph_levels(t: int, k: int, source: int) -> np.ndarray:
    """BFS levels from one word, neighbors generated by the shift rule"""
    n = t**k
    high = t ** (k - 1)
    symbols = np.arange(t, dtype=np.int64)
    dist = np.full(n, UNREACHED, dtype=np.int64)
    dist[source] = 0
    frontier = np.array([source], dtype=np.int64)
    level = 0
    while frontier.size:
        level += 1
        left = (symbols[:, None] * high + (frontier // t)[None, :]).ravel()
        right = ((frontier % high)[None, :] * t + symbols[:, None]).ravel()
        reached = np.unique(np.concatenate((left, right)))
        reached = reached[dist[reached] == UNREACHED]
        dist[reached] = level
        frontier = reached
    return dist


def orbit_representatives(t: int, k: int) -> List[Tuple[int, ...]]:
    """One word per symbol-permutation orbit: symbols appear in first-use order"""
    representatives = []

    def extend(prefix: List[int], used: int) -> None:
        if len(prefix) == k:
            representatives.append(tuple(prefix))
            return
        for symbol in range(1, min(used + 1, t) + 1):
            extend(prefix + [symbol], max(used, symbol))

    extend([], 0)
    return representatives


def canonical_word(word: Sequence[int]) -> Tuple[int, ...]:
    """Relabel symbols by order of first appearance"""
    relabel: Dict[int, int] = {}
    for symbol in word:
        relabel.setdefault(symbol, len(relabel) + 1)
    return tuple(relabel[symbol] for symbol in word)


def _eccentricity(levels: np.ndarray, n: int) -> int:
    if (levels == UNREACHED).any():
        return n * n
    return int(levels.max())


def _ball_sizes(levels: np.ndarray) -> np.ndarray:
    """|B_r| for r = 0, 1, ... up to the source's eccentricity"""
    return np.cumsum(np.bincount(levels[levels != UNREACHED], minlength=1))


def word_graph_local_diameters(t: int, k: int, method: str = "orbit") -> np.ndarray:
    """
    Local diameter of every vertex.

    Args:
        t: alphabet size
        k: word length
        method: "orbit" runs one BFS per orbit representative, "full" one per
            vertex (small graphs only)
    """
    n = t**k
    if method == "full":
        return np.array(
            [_eccentricity(word_graph_levels(t, k, v), n) for v in range(n)], dtype=np.int64
        )
    if method != "orbit":
        raise InvalidParameter(f"unknown sweep method {method!r}")

    by_orbit = {
        word: _eccentricity(word_graph_levels(t, k, encode_word(t, word)), n)
        for word in orbit_representatives(t, k)
    }
    logger.info(f"word graph t={t} k={k}: {len(by_orbit)} orbit BFS runs for {n} vertices")
    return np.array(
        [by_orbit[canonical_word(decode_word(t, k, v))] for v in range(n)], dtype=np.int64
    )


def word_graph_expansion_profile(t: int, k: int, method: str = "orbit") -> List[int]:
    """f(r) = min over vertices of |B_r(u)| for r = 1 .. diameter"""
    n = t**k
    if method == "full":
        sources = range(n)
    elif method == "orbit":
        sources = [encode_word(t, word) for word in orbit_representatives(t, k)]
    else:
        raise InvalidParameter(f"unknown sweep method {method!r}")

    balls = [_ball_sizes(word_graph_levels(t, k, v)) for v in sources]
    radius = max(len(sizes) - 1 for sizes in balls)
    profile = []
    for r in range(1, radius + 1):
        profile.append(int(min(sizes[r] if r < len(sizes) else sizes[-1] for sizes in balls)))
    return profile


# ==================== GENERATORS ====================


def _build_word_graph(
    t: int, k: int, provenance: Provenance, details: Optional[Dict] = None
) -> ConstructionOutput:
    n = t**k
    edges = word_graph_edges(t, k)
    owners, targets, flips = orient_edges(n, edges)
    strategies = _strategies_from_arcs(n, owners, targets)
    degrees = np.bincount(edges.ravel(), minlength=n)

    spec = GameSpec(
        n=n, budgets=tuple(len(s) for s in strategies), version=CostVersion.MAX
    )
    logger.info(
        f"word graph t={t} k={k}: {n} vertices, {len(edges)} edges, "
        f"degrees {int(degrees.min())}..{int(degrees.max())}, {flips} flips"
    )
    return ConstructionOutput(
        spec=spec,
        profile=StrategyProfile.of(strategies),
        provenance=provenance,
        claims=(
            Claim(kind=ClaimKind.EQUILIBRIUM, versions=(CostVersion.MAX,)),
            Claim(kind=ClaimKind.DIAMETER_EQUALS, value=k),
            Claim(kind=ClaimKind.MIN_DEGREE_AT_LEAST, value=t - 1),
            Claim(kind=ClaimKind.MAX_DEGREE_AT_MOST, value=2 * t),
        ),
        labels=tuple(word_label(t, k, v) for v in range(n)),
        details={
            "t": t,
            "k": k,
            "edges": int(len(edges)),
            "flips": flips,
            "min_degree": int(degrees.min()),
            "max_degree": int(degrees.max()),
            "counting_condition": {
                "lhs": (2 * t) ** k - 1,
                "rhs": t**k * (2 * t - 1),
                "holds": counting_condition(n, k, 2 * t),
            },
            **(details or {}),
        },
    )


def _ensure_vertex_cap(n: int, vertex_cap: int) -> None:
    if n > vertex_cap:
        raise ResourceBound(f"{n} vertices exceed the vertex cap {vertex_cap}")


def gen_word_graph(t: int, k: int, vertex_cap: int = DEFAULT_VERTEX_CAP) -> ConstructionOutput:
    """Word graph with a positive-outdegree orientation, claimed MAX equilibrium"""
    if t <= 3 or k <= 3:
        raise ConditionViolated(f"word graph needs t > 3 and k > 3, got t={t}, k={k}")
    if not counting_condition(t**k, k, 2 * t):
        raise ConditionViolated(
            f"(2t)^k - 1 = {(2 * t) ** k - 1} is not below t^k (2t - 1) = {t**k * (2 * t - 1)}"
        )
    _ensure_vertex_cap(t**k, vertex_cap)
    return _build_word_graph(t, k, Provenance.WORD_GRAPH)


def gen_sqrtlog_instance(k: int, vertex_cap: int = DEFAULT_VERTEX_CAP) -> ConstructionOutput:
    """Word graph with t = 2^k: n = 2^(k^2) vertices, diameter k = sqrt(log2 n)"""
    if k <= 3:
        raise InvalidParameter(f"sqrt(log n) family needs k > 3, got {k}")
    t = 2**k
    if not counting_condition(t**k, k, 2 * t):
        raise ConditionViolated(f"counting condition fails for k={k}")
    _ensure_vertex_cap(t**k, vertex_cap)
    return _build_word_graph(t, k, Provenance.SQRTLOG, {"log2_n": k * k})


# ==================== SAMPLED DEVIATIONS ====================


def deviation_spot_check(output: ConstructionOutput, samples: int, seed: int = 0) -> int:
    """
    Count random full-strategy replacements that bring the MAX cost below k.

    A deviator's MAX cost is below k exactly when its radius-(k-1) ball
    covers the whole graph, so each sample is one bounded BFS. The claimed
    diameter supplies k.
    """
    claim = output.claimed(ClaimKind.DIAMETER_EQUALS)
    if claim is None:
        raise InvalidParameter("construction carries no diameter claim")
    k = claim.value
    n = output.spec.n
    strategies = output.profile.strategies

    graph = strategy_graph(n, strategies)
    incoming = [set() for _ in range(n)]
    for owner, targets in enumerate(strategies):
        for target in targets:
            incoming[target].add(owner)

    rng = np.random.default_rng(seed)
    improving = 0
    for _ in range(samples):
        player = int(rng.integers(n))
        budget = output.spec.budgets[player]
        picks = rng.choice(n - 1, size=budget, replace=False) if budget else []
        replacement = {int(p) if p < player else int(p) + 1 for p in picks}

        dropped = [(player, w) for w in strategies[player] if w not in incoming[player]]
        graph.remove_edges_from(dropped)
        added = [(player, w) for w in replacement if not graph.has_edge(player, w)]
        graph.add_edges_from(added)

        if ball_covers(graph, player, k - 1):
            improving += 1
            logger.warning(f"player {player + 1} reaches everything within {k - 1}")

        graph.remove_edges_from(added)
        graph.add_edges_from(dropped)

    logger.info(f"deviation spot check: {improving} of {samples} samples beat cost {k}")
    return improving
