import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.core.exceptions import InvalidGame
from app.engine import (
    best_response_dynamics,
    is_equilibrium_exact,
    profile_digest,
    random_profile,
    replay_trace,
)
from app.engine.dynamics import _ProfileHistory
from app.models import DynamicsOutcome, Move, OrderPolicy, ResponseMode
from tests.helpers import game


def test_path_converges(path4):
    spec, start = path4
    trace = best_response_dynamics(spec, start)
    assert trace.outcome == DynamicsOutcome.EQUILIBRIUM
    assert trace.moves
    assert is_equilibrium_exact(spec, trace.final).is_equilibrium
    assert replay_trace(trace.initial, trace.moves) == trace.final


def test_equilibrium_start_is_one_silent_round(triangle):
    trace = best_response_dynamics(*triangle)
    assert trace.outcome == DynamicsOutcome.EQUILIBRIUM
    assert trace.rounds == 1
    assert trace.moves == ()
    assert trace.final == trace.initial


def test_zero_round_limit(path4):
    trace = best_response_dynamics(*path4, round_limit=0)
    assert trace.outcome == DynamicsOutcome.ROUND_LIMIT
    assert trace.rounds == 0
    assert trace.moves == ()


def test_negative_round_limit(path4):
    with pytest.raises(InvalidGame):
        best_response_dynamics(*path4, round_limit=-1)


def test_swap_oracle_reports_swap_stability(path4):
    trace = best_response_dynamics(*path4, oracle=ResponseMode.SWAP)
    assert trace.outcome == DynamicsOutcome.SWAP_STABLE
    assert trace.oracle == ResponseMode.SWAP


def test_seeded_random_order_is_deterministic(cycle7):
    spec, start = cycle7
    first = best_response_dynamics(spec, start, OrderPolicy.RANDOM, seed=7)
    second = best_response_dynamics(spec, start, OrderPolicy.RANDOM, seed=7)
    assert first == second


def test_moves_are_one_based_in_json(path4):
    trace = best_response_dynamics(*path4)
    record = trace.moves[0].to_json()
    assert record["player"] == 1
    assert Move.from_json(record) == trace.moves[0]


def test_replay_rejects_inconsistent_moves(path4):
    spec, start = path4
    wrong = Move(
        round=1, player=0, old_strategy=(3,), new_strategy=(2,), old_cost=6, new_cost=5
    )
    with pytest.raises(InvalidGame):
        replay_trace(start, [wrong])


def test_digest_ignores_target_order():
    assert profile_digest([(1, 2), (0,)]) == profile_digest([(2, 1), (0,)])
    assert profile_digest([(1,), (0,)]) != profile_digest([(0,), (1,)])


def test_history_confirms_repeats():
    history = _ProfileHistory()
    assert history.record(0, ((1,), (0,))) is None
    assert history.record(1, ((1,), (2,))) is None
    assert history.record(2, ((1,), (0,))) == 0


@settings(max_examples=40, deadline=None)
@given(
    st.integers(3, 6).flatmap(
        lambda n: st.tuples(
            st.lists(st.integers(0, n - 1), min_size=n, max_size=n),
            st.integers(0, 2**32 - 1),
            st.sampled_from(list(OrderPolicy)),
        )
    )
)
def test_trace_invariants(data):
    budgets, seed, order = data
    spec = game(budgets)
    start = random_profile(spec, np.random.default_rng(seed))
    trace = best_response_dynamics(spec, start, order, seed, round_limit=25)

    for move in trace.moves:
        assert move.new_cost < move.old_cost
    assert replay_trace(trace.initial, trace.moves) == trace.final

    if trace.outcome == DynamicsOutcome.EQUILIBRIUM:
        assert is_equilibrium_exact(spec, trace.final).is_equilibrium
    if trace.outcome == DynamicsOutcome.CYCLE_DETECTED:
        earlier = replay_trace(trace.initial, trace.moves[: trace.cycle_start])
        assert earlier == trace.final
        assert trace.cycle_period == len(trace.moves) - trace.cycle_start
