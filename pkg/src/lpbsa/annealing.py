"""Metropolis acceptance, geometric cooling and a plain single-solution SA."""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import (
    AlgorithmConfig,
    ContractError,
    Individual,
    ObjectiveSpec,
    RngStream,
    RunTrace,
    evaluated,
    make_rng,
    random_individual,
)
from .operators import mutate


@dataclass(frozen=True)
class TemperatureState:
    current: float
    cooling_rate: float
    initial: float

    def __post_init__(self):
        if not self.current > 0:
            raise ContractError(f"temperature must be positive, got {self.current!r}")
        if not 0 < self.cooling_rate < 1:
            raise ContractError(f"cooling rate must lie in (0, 1), got {self.cooling_rate!r}")

    @classmethod
    def start(cls, initial: float, cooling_rate: float) -> "TemperatureState":
        return cls(initial, cooling_rate, initial)


def cool(temp: TemperatureState) -> TemperatureState:
    # floor at the smallest normal float so the state stays strictly positive
    nxt = max(temp.current * temp.cooling_rate, sys.float_info.min)
    return TemperatureState(nxt, temp.cooling_rate, temp.initial)


def acceptance_probability(cost_new: float, cost_current: float, temperature: float) -> float:
    if not temperature > 0:
        raise ContractError(f"temperature must be positive, got {temperature!r}")
    if cost_new <= cost_current:
        return 1.0
    return math.exp(-(cost_new - cost_current) / temperature)


def metropolis_accept(candidate: Individual, incumbent: Individual, temp,
                      rng: RngStream) -> Individual:
    """Return whichever of the two survives the Metropolis test.

    ``temp`` may be a :class:`TemperatureState` or a bare positive float.
    A random draw is consumed only when the acceptance probability is below
    one, so improving moves (and any move at infinite temperature) are free.
    """
    t = temp.current if isinstance(temp, TemperatureState) else float(temp)
    if candidate.cost <= incumbent.cost:
        return candidate
    p = acceptance_probability(candidate.cost, incumbent.cost, t)
    if p >= 1.0:
        return candidate
    return candidate if rng.random() < p else incumbent


def simulated_annealing(spec: ObjectiveSpec, config: AlgorithmConfig,
                        rng: Optional[RngStream] = None) -> RunTrace:
    """Classic SA: one-gene Gaussian neighbour, Metropolis test, cool every step."""
    if rng is None:
        rng = make_rng(config.seed)
    temp = TemperatureState.start(config.initial_temperature, config.cooling_rate)
    current = random_individual(spec, rng)
    best = current
    evaluations = 1
    best_costs = np.empty(config.max_iterations)
    accepted = 0
    for it in range(config.max_iterations):
        pos = mutate(current.position, config.mu, spec, rng,
                     scale=config.mutation_scale, n_genes=1)
        cand = evaluated(spec, pos, rng, iteration=it + 1)
        evaluations += 1
        survivor = metropolis_accept(cand, current, temp, rng)
        if survivor is cand:
            accepted += 1
        current = survivor
        if current.cost < best.cost:
            best = current
        best_costs[it] = best.cost
        temp = cool(temp)
    best_costs.setflags(write=False)
    return RunTrace(
        best_costs=best_costs,
        best_individual=best,
        evaluations=evaluations,
        algorithm="SA",
        config_snapshot=config,
        proposals=config.max_iterations,
        acceptances=accepted,
    )
