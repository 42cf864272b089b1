import math

import numpy as np
import pytest

from lpbsa.algorithms import (
    expected_evaluations,
    lpb_run,
    lpbsa_run,
    run_algorithm,
    run_replicates,
)
from lpbsa.benchmarks import get_function
from lpbsa.core import AlgorithmConfig, ContractError, NonFiniteCostError, ObjectiveSpec

from conftest import sphere_spec
from oracles import StubRng, reference_generation


@pytest.mark.parametrize("anneal", [False, True])
@pytest.mark.parametrize("fid, seed", [("TF9", 1), ("TF5", 2), ("TF16", 3), ("TF1", 4)])
def test_one_generation_matches_reference(fid, seed, anneal):
    spec = get_function(fid, dimension=6) if fid != "TF16" else get_function(fid)
    # low temperature so Metropolis rejections actually happen
    cfg = AlgorithmConfig(max_iterations=1, population_size=12, mu=0.25, dp=0.6,
                          initial_temperature=0.5)
    if not anneal:
        cfg = AlgorithmConfig.lpb(max_iterations=1, population_size=12, mu=0.25)
    captured = []
    runner = lpbsa_run if anneal else lpb_run
    trace = runner(spec, cfg, StubRng(seed), callback=lambda it, pop: captured.extend(pop))
    if anneal:
        assert 0 < trace.acceptances < trace.proposals
    ref = reference_generation(spec.function, list(spec.lower_bounds), list(spec.upper_bounds),
                               cfg, StubRng(seed), anneal)
    assert len(captured) == len(ref) == cfg.population_size
    for mine, (x, c) in zip(captured, ref):
        assert np.allclose(mine.position, x, rtol=1e-12, atol=1e-12)
        assert mine.cost == pytest.approx(c, rel=1e-12, abs=1e-12)


# ---- trace invariants -------------------------------------------------------

@pytest.mark.parametrize("runner, cfg", [
    (lpb_run, AlgorithmConfig.lpb(max_iterations=40)),
    (lpbsa_run, AlgorithmConfig(max_iterations=40)),
])
def test_budget_and_monotone(runner, cfg):
    pops = []
    tr = runner(get_function("TF10", dimension=8), cfg, callback=lambda it, p: pops.append(len(p)))
    assert tr.evaluations == expected_evaluations(cfg)
    assert np.all(np.diff(tr.best_costs) <= 0)
    assert pops == [cfg.population_size] * cfg.max_iterations
    assert tr.best_costs[-1] == tr.best_cost


def test_zero_iterations():
    cfg = AlgorithmConfig(max_iterations=0)
    tr = lpbsa_run(sphere_spec(), cfg)
    assert tr.best_costs.size == 0 and tr.evaluations == cfg.population_size


def test_zero_width_bounds_constant():
    spec = ObjectiveSpec("pt", 2, [1.0, 2.0], [1.0, 2.0], lambda x: float(x.sum()))
    for runner in (lpb_run, lpbsa_run):
        tr = runner(spec, AlgorithmConfig(max_iterations=20))
        assert np.all(tr.best_costs == 3.0)


def test_infinite_temperature_accepts_everything():
    cfg = AlgorithmConfig(max_iterations=15, population_size=10)
    tr = lpbsa_run(get_function("TF9", dimension=5), cfg, fixed_temperature=math.inf)
    assert tr.proposals == 15 * 16 and tr.acceptances == tr.proposals


def test_infinite_temperature_equals_lpb_with_same_rates():
    spec = get_function("TF10", dimension=5)
    cfg = AlgorithmConfig(max_iterations=25, population_size=10, seed=6)
    hot = lpbsa_run(spec, cfg, fixed_temperature=math.inf)
    plain = lpb_run(spec, cfg)
    assert np.array_equal(hot.best_costs, plain.best_costs)


def test_greedy_limit_only_improvements():
    spec = get_function("TF9", dimension=5)
    cfg = AlgorithmConfig(max_iterations=20, population_size=10)
    seen = []

    def check(it, pop):
        seen.append(pop[0].cost)

    tr = lpbsa_run(spec, cfg, fixed_temperature=1e-300, callback=check)
    assert tr.acceptances < tr.proposals
    assert np.all(np.diff(tr.best_costs) <= 0)


def test_rejects_bad_fixed_temperature():
    with pytest.raises(ContractError):
        lpbsa_run(sphere_spec(), AlgorithmConfig(max_iterations=1), fixed_temperature=0.0)


def test_nan_objective_aborts():
    spec = ObjectiveSpec("hole", 1, [-1.0], [1.0], lambda x: math.nan if x[0] > 0.5 else x[0] ** 2)
    with pytest.raises(NonFiniteCostError):
        lpbsa_run(spec, AlgorithmConfig(max_iterations=50))


def test_sphere_lpb_band():
    spec = get_function("TF1")
    finals = [t.best_cost for t in run_replicates(spec, AlgorithmConfig.lpb(), "LPB", 3, 0)]
    assert 1e-5 <= np.mean(finals) <= 1e-1


# ---- replicates -------------------------------------------------------------

def test_single_replicate_equals_direct_run():
    spec = sphere_spec(4)
    cfg = AlgorithmConfig(max_iterations=30, seed=0)
    [rep] = run_replicates(spec, cfg, "LPBSA", 1, 17)
    direct = lpbsa_run(spec, cfg.replace(seed=17))
    assert rep.same_as(direct)


def test_replicates_deterministic_and_distinct():
    spec = sphere_spec(4)
    cfg = AlgorithmConfig(max_iterations=20)
    a = run_replicates(spec, cfg, "LPBSA", 30, 5)
    b = run_replicates(spec, cfg, "LPBSA", 30, 5)
    assert all(x.same_as(y) for x, y in zip(a, b))
    finals = {t.best_cost for t in a}
    assert len(finals) == 30


@pytest.mark.parametrize("alg", ["LPB", "lpbsa", "SA"])
def test_run_algorithm_dispatch(alg):
    tr = run_algorithm(alg, sphere_spec(), AlgorithmConfig(max_iterations=5))
    assert tr.algorithm == alg.upper()


def test_run_algorithm_unknown():
    with pytest.raises(ContractError):
        run_algorithm("GA", sphere_spec(), AlgorithmConfig())
