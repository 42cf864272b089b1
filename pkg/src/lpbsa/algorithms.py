"""LPB and LPBSA drivers plus seeded replicate batches."""

from __future__ import annotations

from typing import Callable, List, Optional, Sequence

import numpy as np

from .annealing import TemperatureState, cool, metropolis_accept, simulated_annealing
from .core import (
    AlgorithmConfig,
    ContractError,
    Individual,
    ObjectiveSpec,
    RngStream,
    RunTrace,
    clamp_to_bounds,
    evaluated,
    make_rng,
    random_individual,
)
from .operators import (
    crossover,
    divide_population,
    mutate,
    offspring_counts,
    roulette_select,
    select_parents,
    selection_probabilities,
    sort_population,
)

ALGORITHMS = ("LPB", "LPBSA", "SA")

# called as callback(iteration, population) after each truncation
Callback = Callable[[int, Sequence[Individual]], None]


def expected_evaluations(config: AlgorithmConfig, algorithm: str = "LPBSA") -> int:
    if algorithm.upper() == "SA":
        return 1 + config.max_iterations
    n_c, n_m = offspring_counts(config.pc, config.pm, config.population_size)
    return config.population_size + config.max_iterations * (n_c + n_m)


def _evolve(spec: ObjectiveSpec, config: AlgorithmConfig, rng: Optional[RngStream],
            *, anneal: bool, fixed_temperature: Optional[float],
            callback: Optional[Callback]) -> RunTrace:
    if rng is None:
        rng = make_rng(config.seed)
    n_pop = config.population_size
    n_c, n_m = offspring_counts(config.pc, config.pm, n_pop)

    pop = sort_population([random_individual(spec, rng) for _ in range(n_pop)])
    evaluations = n_pop
    temp = TemperatureState.start(config.initial_temperature, config.cooling_rate)
    proposals = accepted = 0
    best_costs = np.empty(config.max_iterations)

    def keep(child: Individual, source: Individual, pool: List[Individual]):
        nonlocal proposals, accepted
        if not anneal:
            pool.append(child)
            return
        proposals += 1
        t = temp.current if fixed_temperature is None else fixed_temperature
        if metropolis_accept(child, source, t, rng) is child:
            accepted += 1
            pool.append(child)

    for it in range(1, config.max_iterations + 1):
        probs = selection_probabilities([ind.cost for ind in pop], config.selection_beta)
        partition = divide_population(pop, config.dp)
        offspring: List[Individual] = []

        for _ in range(n_c // 2):
            a, b = select_parents(partition, probs, rng, elite_pairing=config.elite_pairing)
            y1, y2 = crossover(a.position, b.position, config.gamma, rng)
            for y in (y1, y2):
                child = evaluated(spec, clamp_to_bounds(y, spec), rng, iteration=it)
                keep(child, a, offspring)
            evaluations += 2

        for _ in range(n_m):
            src = pop[roulette_select(probs, rng)]
            y = mutate(src.position, config.mu, spec, rng, scale=config.mutation_scale)
            keep(evaluated(spec, y, rng, iteration=it), src, offspring)
            evaluations += 1

        pop = sort_population(pop + offspring)[:n_pop]
        best_costs[it - 1] = pop[0].cost
        if anneal:
            temp = cool(temp)
        if callback is not None:
            callback(it, pop)

    best_costs.setflags(write=False)
    return RunTrace(
        best_costs=best_costs,
        best_individual=pop[0],
        evaluations=evaluations,
        algorithm="LPBSA" if anneal else "LPB",
        config_snapshot=config,
        proposals=proposals,
        acceptances=accepted,
    )


def lpb_run(spec: ObjectiveSpec, config: Optional[AlgorithmConfig] = None,
            rng: Optional[RngStream] = None, *, callback: Optional[Callback] = None
            ) -> RunTrace:
    """Learner Performance-based Behaviour baseline.

    Each generation sorts the population, derives roulette weights, splits
    it into perfect/good/worst tiers, breeds ``n_c`` blend-crossover children
    and ``n_m`` Gaussian mutants, then keeps the best ``nPop`` of parents and
    offspring together. ``config`` defaults to :meth:`AlgorithmConfig.lpb`.
    """
    if config is None:
        config = AlgorithmConfig.lpb()
    return _evolve(spec, config, rng, anneal=False, fixed_temperature=None,
                   callback=callback)


def lpbsa_run(spec: ObjectiveSpec, config: Optional[AlgorithmConfig] = None,
              rng: Optional[RngStream] = None, *, fixed_temperature: Optional[float] = None,
              callback: Optional[Callback] = None) -> RunTrace:
    """LPB with simulated-annealing screening of every offspring.

    Crossover children are tested against their first parent and mutants
    against the individual they were mutated from; rejected offspring are
    dropped before the merge. The temperature cools once per generation.

    ``fixed_temperature`` pins the Metropolis temperature (``math.inf``
    accepts everything, a tiny value is greedy); it exists for testing.
    """
    if config is None:
        config = AlgorithmConfig.lpbsa()
    if fixed_temperature is not None and not fixed_temperature > 0:
        raise ContractError(f"fixed_temperature must be positive, got {fixed_temperature!r}")
    return _evolve(spec, config, rng, anneal=True, fixed_temperature=fixed_temperature,
                   callback=callback)


def run_algorithm(algorithm: str, spec: ObjectiveSpec, config: AlgorithmConfig,
                  rng: Optional[RngStream] = None) -> RunTrace:
    key = algorithm.upper()
    if key == "LPB":
        return lpb_run(spec, config, rng)
    if key == "LPBSA":
        return lpbsa_run(spec, config, rng)
    if key == "SA":
        return simulated_annealing(spec, config, rng)
    raise ContractError(f"unknown algorithm {algorithm!r}; choose from {', '.join(ALGORITHMS)}")


def run_replicates(spec: ObjectiveSpec, config: AlgorithmConfig, algorithm: str,
                   n_runs: int, base_seed: int) -> List[RunTrace]:
    """Replicate ``i`` always uses seed ``base_seed + i``, so batches are order independent."""
    if n_runs < 1:
        raise ContractError(f"n_runs must be at least 1, got {n_runs!r}")
    traces = []
    for i in range(n_runs):
        cfg = config.replace(seed=base_seed + i)
        traces.append(run_algorithm(algorithm, spec, cfg, make_rng(cfg.seed)))
    return traces
