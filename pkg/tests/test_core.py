import math

import numpy as np
import pytest

from lpbsa.core import (
    AlgorithmConfig,
    ConfigError,
    ContractError,
    Individual,
    NonFiniteCostError,
    ObjectiveSpec,
    clamp_to_bounds,
    evaluated,
    make_rng,
    random_individual,
)

from conftest import sphere_spec


def unit_box(dim):
    return ObjectiveSpec("box", dim, np.zeros(dim), np.ones(dim), lambda x: float(x.sum()))


@pytest.mark.parametrize("v, expected", [
    ([0.5], [0.5]),
    ([1.0000001], [1.0]),
])
def test_clamp_one_dimensional(v, expected):
    assert clamp_to_bounds(v, unit_box(1)).tolist() == expected


def test_clamp_projects_both_sides():
    assert clamp_to_bounds([-2.0, 3.0], unit_box(2)).tolist() == [0.0, 1.0]


def test_clamp_rejects_wrong_length():
    with pytest.raises(ContractError):
        clamp_to_bounds([0.1, 0.2, 0.3], unit_box(2))


def test_random_individual_degenerate_box():
    spec = ObjectiveSpec("flat", 4, np.zeros(4), np.zeros(4), lambda x: float(np.sum(x) + 7))
    ind = random_individual(spec, make_rng(3))
    assert ind.position.tolist() == [0.0] * 4
    assert ind.cost == 7.0


def test_random_individual_within_bounds():
    spec = sphere_spec(30, -100, 100)
    for seed in range(20):
        ind = random_individual(spec, make_rng(seed))
        assert np.all(ind.position >= -100) and np.all(ind.position <= 100)


def test_random_individual_deterministic():
    spec = sphere_spec(5)
    a = random_individual(spec, make_rng(42))
    b = random_individual(spec, make_rng(42))
    assert np.array_equal(a.position, b.position) and a.cost == b.cost


def test_individual_is_read_only():
    ind = Individual(np.array([1.0, 2.0]), 5.0)
    with pytest.raises(ValueError):
        ind.position[0] = 3.0


def test_evaluated_rejects_nan():
    spec = ObjectiveSpec("nan", 1, [0.0], [1.0], lambda x: float("nan"))
    with pytest.raises(NonFiniteCostError) as info:
        evaluated(spec, [0.5], iteration=4)
    assert info.value.iteration == 4


def test_noise_only_with_generator():
    spec = ObjectiveSpec("noisy", 1, [0.0], [1.0], lambda x: 1.0, noise=lambda x, rng: rng.random())
    assert spec.evaluate([0.2]) == 1.0
    assert 1.0 <= spec.evaluate([0.2], make_rng(0)) < 2.0


def test_spec_rejects_inverted_bounds():
    with pytest.raises(ContractError):
        ObjectiveSpec("bad", 2, [1.0, 0.0], [0.0, 1.0], lambda x: 0.0)


def test_negative_seed_wraps():
    a = make_rng(-1).random()
    b = make_rng(2**64 - 1).random()
    assert a == b


def test_default_config_values():
    c = AlgorithmConfig()
    assert (c.population_size, c.max_iterations) == (30, 1000)
    assert (c.pc, c.pm, c.mu, c.dp, c.cooling_rate) == (0.8, 0.8, 0.03, 0.9, 0.99)


def test_lpb_config_values():
    c = AlgorithmConfig.lpb()
    assert (c.pc, c.pm, c.mu, c.dp) == (0.6, 0.3, 0.03, 0.5)
    assert AlgorithmConfig.for_algorithm("lpb") == c


@pytest.mark.parametrize("field, value", [
    ("dp", 1.5), ("dp", 0.0), ("dp", 1.0), ("pc", -0.1), ("pm", 1.01), ("mu", 2.0),
    ("cooling_rate", 1.0), ("cooling_rate", 0.0), ("population_size", 0),
    ("max_iterations", -1), ("max_iterations", 2.5), ("initial_temperature", 0.0),
    ("selection_beta", 0.0), ("gamma", math.inf), ("mutation_scale", -1.0),
])
def test_config_rejection_names_field(field, value):
    with pytest.raises(ConfigError) as info:
        AlgorithmConfig(**{field: value})
    assert info.value.field == field
    assert field in str(info.value)


def test_config_round_trips_through_dict():
    c = AlgorithmConfig(seed=9, gamma=0.3)
    assert AlgorithmConfig(**c.to_dict()) == c
    assert c.replace(seed=10).seed == 10
