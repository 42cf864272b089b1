"""LPBSA: learner performance-based behaviour evolution with annealed offspring acceptance."""

from .algorithms import ALGORITHMS, lpb_run, lpbsa_run, run_algorithm, run_replicates
from .annealing import (
    TemperatureState,
    acceptance_probability,
    cool,
    metropolis_accept,
    simulated_annealing,
)
from .benchmarks import catalog, get_function, list_functions
from .core import (
    AlgorithmConfig,
    ConfigError,
    ContractError,
    Individual,
    NonFiniteCostError,
    ObjectiveSpec,
    RunTrace,
    clamp_to_bounds,
    make_rng,
    random_individual,
)
from .stats import SampleSummary, significance_table, summarize, wilcoxon_rank_sum

__version__ = "0.1.0"
