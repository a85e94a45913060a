import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.core.exceptions import EnumerationCapExceeded
from app.engine import (
    enumerate_equilibria,
    gen_spider,
    is_equilibrium_exact,
    is_equilibrium_sufficient,
    is_swap_equilibrium,
    profile_count,
    profile_diameter,
    random_profile,
    unit_budget_structure,
)
from app.models import CostVersion, SufficientVerdict
from tests.helpers import all_profiles, budget_shapes, game, profile

EXHAUSTIVE_PROFILE_LIMIT = 20_000


class TestExactCheck:
    def test_triangle_is_an_equilibrium(self, triangle):
        verdict = is_equilibrium_exact(*triangle)
        assert verdict.is_equilibrium
        assert verdict.witness is None
        assert verdict.version == CostVersion.SUM

    def test_brace_witness(self, brace3):
        verdict = is_equilibrium_exact(*brace3)
        assert not verdict.is_equilibrium
        assert verdict.witness.to_json() == {
            "player": 2,
            "strategy": [3],
            "old_cost": 3,
            "new_cost": 2,
        }

    def test_path_witness(self, path4):
        verdict = is_equilibrium_exact(*path4)
        assert not verdict.is_equilibrium
        assert verdict.witness.player == 0

    def test_cap(self, path4):
        with pytest.raises(EnumerationCapExceeded):
            is_equilibrium_exact(*path4, cap=2)

    def test_spider_in_max(self):
        output = gen_spider(2)
        assert is_equilibrium_exact(output.spec, output.profile, CostVersion.MAX).is_equilibrium


class TestSufficientCheck:
    def test_star(self):
        spec, prof = game([3, 0, 0, 0]), profile([2, 3, 4], [], [], [])
        assert is_equilibrium_sufficient(spec, prof) == SufficientVerdict.PROVEN

    def test_triangle(self, triangle):
        assert is_equilibrium_sufficient(*triangle) == SufficientVerdict.PROVEN

    def test_spider_is_inconclusive(self):
        output = gen_spider(2)
        verdict = is_equilibrium_sufficient(output.spec, output.profile)
        assert verdict == SufficientVerdict.INCONCLUSIVE

    def test_brace_is_inconclusive(self, brace3):
        assert is_equilibrium_sufficient(*brace3) == SufficientVerdict.INCONCLUSIVE

    @settings(max_examples=80, deadline=None)
    @given(
        st.integers(2, 6).flatmap(
            lambda n: st.tuples(
                st.lists(st.integers(0, n - 1), min_size=n, max_size=n),
                st.integers(0, 2**32 - 1),
            )
        )
    )
    def test_proven_implies_equilibrium(self, data):
        budgets, seed = data
        spec = game(budgets)
        prof = random_profile(spec, np.random.default_rng(seed))
        if is_equilibrium_sufficient(spec, prof) != SufficientVerdict.PROVEN:
            return
        for version in (CostVersion.SUM, CostVersion.MAX):
            assert is_equilibrium_exact(spec, prof, version).is_equilibrium

    # relabeling players maps profiles onto profiles, so non-increasing
    # budget vectors cover every game up to isomorphism
    @pytest.mark.parametrize(
        "n",
        [2, 3, 4, pytest.param(5, marks=pytest.mark.slow), pytest.param(6, marks=pytest.mark.slow)],
    )
    def test_proven_implies_equilibrium_on_every_profile(self, n):
        for budgets in budget_shapes(n):
            spec = game(budgets)
            if profile_count(spec) > EXHAUSTIVE_PROFILE_LIMIT:
                continue
            for candidate in all_profiles(spec):
                if is_equilibrium_sufficient(spec, candidate) != SufficientVerdict.PROVEN:
                    continue
                for version in (CostVersion.SUM, CostVersion.MAX):
                    verdict = is_equilibrium_exact(spec, candidate, version)
                    assert verdict.is_equilibrium, (budgets, candidate.to_one_based())


class TestSwapCheck:
    def test_triangle(self, triangle):
        assert is_swap_equilibrium(*triangle).is_equilibrium

    def test_path(self, path4):
        verdict = is_swap_equilibrium(*path4)
        assert not verdict.is_equilibrium
        assert verdict.witness.new_cost < verdict.witness.old_cost


class TestEnumeration:
    def test_unit_triangle(self):
        survey = enumerate_equilibria(game([1, 1, 1]))
        assert survey.profiles_examined == 8
        assert survey.count == 2
        assert [p.to_one_based() for p in survey.equilibria] == [
            [[2], [3], [1]],
            [[3], [1], [2]],
        ]
        assert survey.diameters == (1, 1)

    def test_brace_is_the_only_profile(self):
        survey = enumerate_equilibria(game([1, 1]))
        assert survey.count == 1
        assert survey.equilibria[0].to_one_based() == [[2], [1]]

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_connectable_sum_equilibria_have_diameter_at_most_n(self, n):
        for budgets in budget_shapes(n):
            spec = game(budgets)
            if spec.total_budget < n - 1:
                continue
            survey = enumerate_equilibria(spec)
            assert survey.all_connected, budgets
            assert all(value <= n for value in survey.diameters), budgets

    def test_cap(self):
        spec = game([1] * 6)
        assert profile_count(spec) == 5**6
        with pytest.raises(EnumerationCapExceeded):
            enumerate_equilibria(spec, cap=1000)

    def test_min_realization_diameter(self):
        survey = enumerate_equilibria(game([1, 1, 1]), with_min_diameter=True)
        assert survey.min_realization_diameter == 1

    def test_workers_give_the_same_order(self):
        spec = game([1, 1, 1, 1])
        serial = enumerate_equilibria(spec)
        parallel = enumerate_equilibria(spec, workers=2)
        assert parallel.equilibria == serial.equilibria
        assert parallel.profiles_examined == serial.profiles_examined

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_unit_budget_sum_equilibria_have_short_cycles(self, n):
        survey = enumerate_equilibria(game([1] * n))
        assert survey.count > 0
        for equilibrium in survey.equilibria:
            report = unit_budget_structure(game([1] * n), equilibrium)
            assert report.verdict("sum").holds

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_unit_budget_max_equilibria(self, n):
        spec = game([1] * n, "max")
        survey = enumerate_equilibria(spec)
        for equilibrium in survey.equilibria:
            assert unit_budget_structure(spec, equilibrium).verdict("max").holds

    @pytest.mark.slow
    def test_unit_budget_six_players(self):
        spec = game([1] * 6)
        for equilibrium in enumerate_equilibria(spec).equilibria:
            report = unit_budget_structure(spec, equilibrium)
            assert report.verdict("sum").holds

    def test_profile_diameter(self):
        assert profile_diameter(3, [(1,), (2,), (0,)]) == (1, True)
        assert profile_diameter(3, [(), (), (0,)]) == (9, False)
