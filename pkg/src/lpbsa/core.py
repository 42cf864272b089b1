"""Shared domain types: objectives, individuals, run configuration, RNG."""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

# Any object exposing ``random``, ``uniform``, ``standard_normal`` and
# ``choice`` with numpy Generator semantics. Operators touch nothing else,
# which keeps scripted/stub generators usable in tests.
RngStream = np.random.Generator

_SEED_MASK = (1 << 64) - 1


class ContractError(ValueError):
    """Raised when an operation is called outside its preconditions."""


class ConfigError(ValueError):
    """Invalid configuration value. ``field`` names the offending key."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


class NonFiniteCostError(RuntimeError):
    """The objective returned NaN or an infinity during a run."""

    def __init__(self, iteration: int, position: np.ndarray, cost: float):
        self.iteration = iteration
        self.position = np.array(position)
        self.cost = cost
        super().__init__(
            f"non-finite cost {cost!r} at iteration {iteration}, "
            f"position {np.array2string(self.position, precision=6)}"
        )


def make_rng(seed: int) -> RngStream:
    """One independent reproducible stream per seed (negative seeds wrap mod 2**64)."""
    return np.random.default_rng(int(seed) & _SEED_MASK)


def _frozen_array(values) -> np.ndarray:
    arr = np.array(values, dtype=np.float64)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class ObjectiveSpec:
    """A box-bounded minimisation problem.

    ``function`` must be deterministic. If ``noise`` is set, it is called as
    ``noise(x, rng)`` and added to the value whenever a generator is supplied
    to :meth:`evaluate`; without one the objective is noise free.
    """

    name: str
    dimension: int
    lower_bounds: np.ndarray
    upper_bounds: np.ndarray
    function: Callable[[np.ndarray], float]
    known_optimum: Optional[float] = None
    optimizer: Optional[np.ndarray] = None
    noise: Optional[Callable[[np.ndarray, RngStream], float]] = None
    description: str = ""

    def __post_init__(self):
        if self.dimension < 1:
            raise ContractError(f"{self.name}: dimension must be positive")
        lo = _frozen_array(np.broadcast_to(self.lower_bounds, (self.dimension,)))
        hi = _frozen_array(np.broadcast_to(self.upper_bounds, (self.dimension,)))
        object.__setattr__(self, "lower_bounds", lo)
        object.__setattr__(self, "upper_bounds", hi)
        if np.any(lo > hi):
            raise ContractError(f"{self.name}: lower bound exceeds upper bound")
        if self.optimizer is not None:
            opt = _frozen_array(self.optimizer)
            if opt.shape != (self.dimension,):
                raise ContractError(f"{self.name}: optimizer has wrong shape {opt.shape}")
            object.__setattr__(self, "optimizer", opt)

    @property
    def span(self) -> np.ndarray:
        return self.upper_bounds - self.lower_bounds

    def evaluate(self, x, rng: Optional[RngStream] = None) -> float:
        x = np.asarray(x, dtype=np.float64)
        value = float(self.function(x))
        if self.noise is not None and rng is not None:
            value += float(self.noise(x, rng))
        return value

    def __call__(self, x) -> float:
        return self.evaluate(x)

    def with_bounds(self, lower, upper) -> "ObjectiveSpec":
        return dataclasses.replace(self, lower_bounds=lower, upper_bounds=upper)


@dataclass(frozen=True, eq=False)
class Individual:
    position: np.ndarray
    cost: float

    def __post_init__(self):
        object.__setattr__(self, "position", _frozen_array(self.position))
        object.__setattr__(self, "cost", float(self.cost))

    def __repr__(self):
        return f"Individual(cost={self.cost!r}, position={self.position!r})"


def evaluated(spec: ObjectiveSpec, position, rng: Optional[RngStream] = None,
              iteration: int = 0) -> Individual:
    """Evaluate ``position`` and wrap it, aborting on non-finite cost."""
    cost = spec.evaluate(position, rng)
    if not math.isfinite(cost):
        raise NonFiniteCostError(iteration, position, cost)
    return Individual(position, cost)


def clamp_to_bounds(v, spec: ObjectiveSpec) -> np.ndarray:
    v = np.asarray(v, dtype=np.float64)
    if v.shape != (spec.dimension,):
        raise ContractError(
            f"{spec.name}: expected vector of length {spec.dimension}, got shape {v.shape}"
        )
    return np.minimum(np.maximum(v, spec.lower_bounds), spec.upper_bounds)


def random_individual(spec: ObjectiveSpec, rng: RngStream) -> Individual:
    """Uniform draw inside the box, evaluated once (noise, if any, from ``rng``)."""
    position = rng.uniform(spec.lower_bounds, spec.upper_bounds, spec.dimension)
    position = clamp_to_bounds(position, spec)
    return evaluated(spec, position, rng)


@dataclass(frozen=True, eq=False)
class RunTrace:
    """Outcome of one seeded run.

    ``best_costs[t]`` is the best cost after iteration ``t + 1``; the series
    is empty when ``max_iterations`` is 0. ``proposals`` / ``acceptances``
    count Metropolis tests (zero for plain LPB).
    """

    best_costs: np.ndarray
    best_individual: Individual
    evaluations: int
    algorithm: str
    config_snapshot: "AlgorithmConfig"
    proposals: int = 0
    acceptances: int = 0

    @property
    def best_cost(self) -> float:
        return self.best_individual.cost

    @property
    def acceptance_rate(self) -> float:
        return self.acceptances / self.proposals if self.proposals else float("nan")

    def same_as(self, other: "RunTrace") -> bool:
        """Bit-level equality of the recorded results."""
        return (
            self.algorithm == other.algorithm
            and self.evaluations == other.evaluations
            and np.array_equal(self.best_costs, other.best_costs)
            and np.array_equal(self.best_individual.position, other.best_individual.position)
            and self.best_individual.cost == other.best_individual.cost
            and self.config_snapshot == other.config_snapshot
        )


def _check_unit(name, value, *, low_open=False, high_open=False):
    lo_ok = value > 0 if low_open else value >= 0
    hi_ok = value < 1 if high_open else value <= 1
    if not (lo_ok and hi_ok and math.isfinite(value)):
        lb = "(" if low_open else "["
        rb = ")" if high_open else "]"
        raise ConfigError(name, f"must lie in {lb}0, 1{rb}, got {value!r}")


@dataclass(frozen=True)
class AlgorithmConfig:
    """Tunables for LPB, LPBSA and plain SA.

    Defaults are the LPBSA settings (nPop 30, mu 0.03, cooling rate 0.99,
    dp 0.90, pc = pm = 0.8). Use :meth:`lpb` for the baseline settings.

    ``mutation_scale`` is the Gaussian step as a fraction of each variable's
    range. ``elite_pairing`` draws both crossover parents from the elite
    tiers instead of taking the second from the whole population.
    """

    max_iterations: int = 1000
    population_size: int = 30
    pc: float = 0.8
    pm: float = 0.8
    gamma: float = 0.8
    mu: float = 0.03
    dp: float = 0.9
    selection_beta: float = 64.0
    cooling_rate: float = 0.99
    initial_temperature: float = 100.0
    seed: int = 0
    mutation_scale: float = 0.05
    elite_pairing: bool = False

    def __post_init__(self):
        if int(self.max_iterations) != self.max_iterations or self.max_iterations < 0:
            raise ConfigError("max_iterations", f"must be a non-negative integer, got {self.max_iterations!r}")
        if int(self.population_size) != self.population_size or self.population_size < 1:
            raise ConfigError("population_size", f"must be a positive integer, got {self.population_size!r}")
        _check_unit("pc", self.pc)
        _check_unit("pm", self.pm)
        _check_unit("mu", self.mu)
        _check_unit("dp", self.dp, low_open=True, high_open=True)
        _check_unit("cooling_rate", self.cooling_rate, low_open=True, high_open=True)
        if not (self.gamma >= 0 and math.isfinite(self.gamma)):
            raise ConfigError("gamma", f"must be a finite non-negative real, got {self.gamma!r}")
        if not (self.selection_beta > 0 and math.isfinite(self.selection_beta)):
            raise ConfigError("selection_beta", f"must be positive, got {self.selection_beta!r}")
        if not self.initial_temperature > 0:
            raise ConfigError("initial_temperature", f"must be positive, got {self.initial_temperature!r}")
        if not (self.mutation_scale >= 0 and math.isfinite(self.mutation_scale)):
            raise ConfigError("mutation_scale", f"must be non-negative, got {self.mutation_scale!r}")
        if int(self.seed) != self.seed or not -(1 << 63) <= self.seed <= _SEED_MASK:
            raise ConfigError("seed", f"must be a 64-bit integer, got {self.seed!r}")
        object.__setattr__(self, "max_iterations", int(self.max_iterations))
        object.__setattr__(self, "population_size", int(self.population_size))
        object.__setattr__(self, "seed", int(self.seed))

    @classmethod
    def lpb(cls, **overrides) -> "AlgorithmConfig":
        """Baseline LPB settings: pc 0.6, pm 0.3, mu 0.03, dp 0.5."""
        params = dict(pc=0.6, pm=0.3, mu=0.03, dp=0.5)
        params.update(overrides)
        return cls(**params)

    @classmethod
    def lpbsa(cls, **overrides) -> "AlgorithmConfig":
        return cls(**overrides)

    @classmethod
    def for_algorithm(cls, algorithm: str, **overrides) -> "AlgorithmConfig":
        key = algorithm.upper()
        if key == "LPB":
            return cls.lpb(**overrides)
        if key in ("LPBSA", "SA"):
            return cls(**overrides)
        raise ConfigError("algorithm", f"unknown algorithm {algorithm!r}")

    def replace(self, **changes) -> "AlgorithmConfig":
        return dataclasses.replace(self, **changes)

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)

    @classmethod
    def field_names(cls) -> Sequence[str]:
        return [f.name for f in dataclasses.fields(cls)]
