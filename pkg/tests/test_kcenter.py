import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.core.exceptions import EnumerationCapExceeded, InvalidGraph, InvalidParameter
from app.engine import (
    best_response_exact,
    brute_force_kcenter,
    brute_force_kmedian,
    reduce_kcenter,
    solve_by_best_response,
    validate_profile,
)
from app.models import CostVersion


class TestReduction:
    def test_orientation_and_extra_player(self, p5):
        reduction = reduce_kcenter(p5, 2)
        assert reduction.player == 5
        assert reduction.vertices == (1, 2, 3, 4, 5)
        assert reduction.spec.budgets == (1, 1, 1, 1, 0, 2)
        assert reduction.profile.to_one_based() == [[2], [3], [4], [5], [], [1, 2]]
        assert reduction.spec.version == CostVersion.MAX
        validate_profile(reduction.spec, reduction.profile)

    def test_path_center(self, p5):
        reduction = reduce_kcenter(p5, 1)
        result = best_response_exact(reduction.spec, reduction.profile, reduction.player)
        assert result.cost == 3
        assert result.strategy == (2,)

        solution = solve_by_best_response(reduction)
        assert solution.value == 2
        assert solution.centers == (3,)
        assert brute_force_kcenter(p5, 1).value == 2

    def test_star_keeps_its_center(self):
        reduction = reduce_kcenter(nx.star_graph(3), 1)
        result = best_response_exact(reduction.spec, reduction.profile, reduction.player)
        assert result.cost == 2
        assert not result.improved
        assert solve_by_best_response(reduction).centers == (0,)

    def test_two_centers_on_a_path(self, p5):
        solution = solve_by_best_response(reduce_kcenter(p5, 2))
        assert solution.value == 1
        assert solution.centers == (1, 4)
        assert brute_force_kcenter(p5, 2).centers == (1, 4)

    @pytest.mark.parametrize("k,expected", [(1, 1), (2, 1), (3, 1), (4, 0)])
    def test_complete_graph(self, k, expected):
        graph = nx.complete_graph(4)
        assert solve_by_best_response(reduce_kcenter(graph, k)).value == expected
        assert brute_force_kcenter(graph, k).value == expected

    def test_median_on_a_path(self, p5):
        solution = solve_by_best_response(reduce_kcenter(p5, 1), CostVersion.SUM)
        assert solution.value == 6
        assert solution.centers == (3,)
        assert brute_force_kmedian(p5, 1).value == 6


class TestAgreement:
    @settings(max_examples=40, deadline=None)
    @given(st.integers(2, 8), st.floats(0.3, 1.0), st.integers(0, 10_000), st.data())
    def test_best_response_matches_brute_force(self, n, p, seed, data):
        graph = nx.gnp_random_graph(n, p, seed=seed)
        if not nx.is_connected(graph):
            return
        k = data.draw(st.integers(1, n))
        reduction = reduce_kcenter(graph, k)

        center = solve_by_best_response(reduction, CostVersion.MAX)
        assert center.value == brute_force_kcenter(graph, k).value
        median = solve_by_best_response(reduction, CostVersion.SUM)
        assert median.value == brute_force_kmedian(graph, k).value


class TestErrors:
    def test_disconnected_host(self):
        with pytest.raises(InvalidGraph):
            reduce_kcenter(nx.empty_graph(3), 1)

    def test_directed_host(self):
        with pytest.raises(InvalidGraph):
            reduce_kcenter(nx.DiGraph([(0, 1), (1, 2)]), 1)

    def test_single_vertex(self):
        with pytest.raises(InvalidGraph):
            brute_force_kcenter(nx.empty_graph(1), 1)

    @pytest.mark.parametrize("k", [0, 6])
    def test_k_out_of_range(self, p5, k):
        with pytest.raises(InvalidParameter):
            reduce_kcenter(p5, k)

    def test_brute_force_cap(self):
        with pytest.raises(EnumerationCapExceeded):
            brute_force_kcenter(nx.path_graph(10), 5, cap=10)

    def test_best_response_cap(self):
        reduction = reduce_kcenter(nx.path_graph(10), 5)
        with pytest.raises(EnumerationCapExceeded):
            solve_by_best_response(reduction, cap=10)
