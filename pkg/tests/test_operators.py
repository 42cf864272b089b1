import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from lpbsa.core import ContractError, Individual, ObjectiveSpec, make_rng
from lpbsa.operators import (
    crossover,
    divide_population,
    mutate,
    offspring_counts,
    roulette_select,
    select_parents,
    selection_probabilities,
)

from conftest import ScriptedRng, sphere_spec


def population(costs):
    return [Individual(np.array([float(c)]), c) for c in costs]


class TestSelectionProbabilities:
    def test_equal_costs_uniform(self):
        assert np.allclose(selection_probabilities([5, 5, 5], 1.0), [1 / 3] * 3, atol=1e-15)

    def test_scaled_weights(self):
        # normalize(exp(-1/4), exp(-2/4), exp(-4/4)), evaluated independently
        expected = [0.44421397916166544, 0.3459541948223698, 0.20983182601596484]
        assert np.allclose(selection_probabilities([1, 2, 4], 1.0), expected, rtol=0, atol=1e-14)

    def test_large_beta_concentrates(self):
        p = selection_probabilities([0, 10], 1e3)
        assert abs(p[0] - 1) < 1e-6 and p[1] < 1e-6

    def test_non_positive_worst_is_shifted(self):
        p = selection_probabilities([-3.0, -1.0], 1.0)
        shifted = np.array([1.0, 3.0])  # costs + (1 + |min|)
        w = np.exp(-shifted / 3.0)
        assert np.allclose(p, w / w.sum())

    @given(st.lists(st.floats(-1e6, 1e6), min_size=1, max_size=40),
           st.floats(0.1, 100))
    @settings(max_examples=200, deadline=None)
    def test_is_distribution_and_order_reversing(self, costs, beta):
        p = selection_probabilities(costs, beta)
        assert abs(p.sum() - 1) < 1e-12 and np.all(p >= 0)
        order = np.argsort(costs, kind="stable")
        assert np.all(np.diff(p[order]) <= 1e-15)

    def test_rejects_empty(self):
        with pytest.raises(ContractError):
            selection_probabilities([], 1.0)


class TestRoulette:
    def test_single_outcome(self):
        rng = make_rng(0)
        assert all(roulette_select([1.0], rng) == 0 for _ in range(100))

    def test_zero_mass_never_chosen(self):
        assert all(roulette_select([0.0, 1.0], ScriptedRng(random=[r])) == 1
                   for r in (0.0, 0.3, 0.999999))

    def test_fair_coin_frequency(self):
        rng = make_rng(1)
        hits = sum(roulette_select([0.5, 0.5], rng) == 0 for _ in range(100_000))
        assert 0.49 <= hits / 100_000 <= 0.51


class TestDivide:
    def test_even_split(self):
        pop = population([1, 2, 3, 4])
        part = divide_population(pop, 0.5)
        assert part.perfect == (pop[0],) and part.good == (pop[1],)
        assert part.worst == (pop[2], pop[3])

    def test_default_dp_sizes(self):
        part = divide_population(population(range(30)), 0.9)
        assert (len(part.perfect), len(part.good), len(part.worst)) == (14, 13, 3)

    def test_singleton(self):
        part = divide_population(population([1]), 0.9)
        assert part.elite_size == 0 and len(part.worst) == 1

    @given(st.integers(1, 200), st.floats(0.01, 0.99))
    def test_tiers_cover_population(self, n, dp):
        part = divide_population(population(range(n)), dp)
        k = math.floor(dp * n)
        assert len(part) == n and part.elite_size == k
        assert len(part.perfect) - len(part.good) in (0, 1)


class TestSelectParents:
    def test_first_parent_favours_perfect(self):
        pop = population([1, 2, 3])
        # dp = 0.7 on n = 3 gives one perfect, one good and one worst member
        part = divide_population(pop, 0.7)
        assert len(part.perfect) == len(part.good) == len(part.worst) == 1
        probs = selection_probabilities([1, 2, 3], 8.0)
        rng = make_rng(5)
        n = 20_000
        hits = sum(select_parents(part, probs, rng)[0] is pop[0] for _ in range(n))
        conditional = probs[0] / (probs[0] + probs[1])
        assert hits / n > probs[0]
        assert abs(hits / n - conditional) < 0.01

    def test_empty_worst_uses_elite(self):
        pop = population([1, 2])
        part = divide_population(pop, 0.99)
        assert part.elite_size == 1
        probs = selection_probabilities([1, 2], 1.0)
        rng = make_rng(0)
        for _ in range(50):
            a, b = select_parents(part, probs, rng, elite_pairing=True)
            assert a is pop[0] and b is pop[0]

    def test_population_of_one(self):
        pop = population([4])
        part = divide_population(pop, 0.9)
        a, b = select_parents(part, [1.0], make_rng(0))
        assert a is b is pop[0]

    def test_second_differs_from_first(self):
        pop = population(range(10))
        part = divide_population(pop, 0.9)
        probs = selection_probabilities(list(range(10)), 8.0)
        rng = make_rng(2)
        for _ in range(500):
            a, b = select_parents(part, probs, rng)
            assert a is not b


class TestCrossover:
    def test_identical_parents(self):
        v = np.array([1.5, -2.0, 3.25])
        for g in (0.0, 0.4, 5.0):
            c1, c2 = crossover(v, v, g, make_rng(0))
            assert np.array_equal(c1, v) and np.array_equal(c2, v)

    def test_midpoint(self):
        c1, c2 = crossover([0.0, 2.0], [4.0, 6.0], 0.0, ScriptedRng(uniform=[[0.5, 0.5]]))
        assert c1.tolist() == [2.0, 4.0] and c2.tolist() == [2.0, 4.0]

    def test_gamma_zero_uniform_cover(self):
        from scipy.stats import kstest
        rng = make_rng(11)
        xs = np.array([crossover([0.0], [1.0], 0.0, rng)[0][0] for _ in range(10_000)])
        assert xs.min() >= 0 and xs.max() <= 1
        assert kstest(xs, "uniform").pvalue > 1e-3

    def test_children_sum_preserved(self):
        rng = make_rng(3)
        p1, p2 = rng.normal(size=8), rng.normal(size=8)
        c1, c2 = crossover(p1, p2, 0.4, rng)
        assert np.allclose(c1 + c2, p1 + p2)


class TestMutate:
    def test_mu_zero_is_identity(self):
        spec = sphere_spec(5)
        v = np.arange(5.0) - 2
        assert np.array_equal(mutate(v, 0.0, spec, make_rng(0)), v)

    def test_zero_width_bounds(self):
        spec = ObjectiveSpec("pt", 4, np.ones(4), np.ones(4), lambda x: 0.0)
        assert mutate(np.ones(4), 1.0, spec, make_rng(0)).tolist() == [1.0] * 4

    def test_one_gene_changes(self):
        spec = sphere_spec(30, -100, 100)
        rng = make_rng(8)
        v = np.zeros(30)
        for _ in range(200):
            assert np.count_nonzero(mutate(v, 0.03, spec, rng) != v) == 1

    def test_clamped(self):
        spec = sphere_spec(2, 0, 1)
        out = mutate([1.0, 1.0], 1.0, spec, ScriptedRng(choice=[[0, 1]], normal=[[50.0, -50.0]]))
        assert out.tolist() == [1.0, 0.0]


@pytest.mark.parametrize("pc, pm, n, expected", [
    (0.8, 0.8, 30, (24, 24)),
    (0.6, 0.3, 30, (18, 9)),
    (0.5, 0.5, 3, (2, 2)),   # 0.75 and 1.5 round half up
    (0.0, 0.0, 30, (0, 0)),
    (1.0, 1.0, 1, (2, 1)),
])
def test_offspring_counts(pc, pm, n, expected):
    assert offspring_counts(pc, pm, n) == expected
