"""Variation and selection operators shared by the LPB-family drivers."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from .core import ContractError, Individual, ObjectiveSpec, RngStream, clamp_to_bounds


def selection_probabilities(costs: Sequence[float], beta: float) -> np.ndarray:
    """Fitness-scaled roulette weights ``exp(-beta * c / c_worst)``, normalised.

    When the worst cost is not positive the costs are shifted by
    ``1 + |min cost|`` first so the divisor stays positive.
    """
    c = np.asarray(costs, dtype=np.float64)
    if c.ndim != 1 or c.size == 0:
        raise ContractError("selection_probabilities needs a non-empty cost list")
    if not np.all(np.isfinite(c)):
        raise ContractError("selection_probabilities got a non-finite cost")
    if not beta > 0:
        raise ContractError(f"beta must be positive, got {beta!r}")
    worst = c.max()
    if worst <= 0:
        c = c + (1.0 + abs(c.min()))
        worst = c.max()
    logits = -beta * c / worst
    logits -= logits.max()
    w = np.exp(logits)
    return w / w.sum()


def roulette_select(probabilities: Sequence[float], rng: RngStream) -> int:
    p = np.asarray(probabilities, dtype=np.float64)
    cdf = np.cumsum(p)
    r = rng.random() * cdf[-1]
    # first index whose cumulative mass strictly exceeds r: zero-mass slots never win
    i = int(np.searchsorted(cdf, r, side="right"))
    return min(i, p.size - 1)


@dataclass(frozen=True)
class PopulationPartition:
    """Cost-ordered tiers of a sorted population."""

    perfect: Tuple[Individual, ...]
    good: Tuple[Individual, ...]
    worst: Tuple[Individual, ...]

    @property
    def elite_size(self) -> int:
        return len(self.perfect) + len(self.good)

    def __len__(self):
        return len(self.perfect) + len(self.good) + len(self.worst)


def divide_population(pop: Sequence[Individual], dp: float) -> PopulationPartition:
    """Split a cost-sorted population into perfect / good / worst tiers.

    The first ``k = floor(dp * n)`` members form the elite; its first
    ``ceil(k / 2)`` are *perfect*, the rest *good*. Everything after index
    ``k`` is *worst*.
    """
    n = len(pop)
    if n == 0:
        raise ContractError("cannot divide an empty population")
    if not 0 < dp < 1:
        raise ContractError(f"dp must lie in (0, 1), got {dp!r}")
    k = math.floor(dp * n)
    h = math.ceil(k / 2)
    pop = tuple(pop)
    return PopulationPartition(pop[:h], pop[h:k], pop[k:])


def select_parents(partition: PopulationPartition, probabilities: Sequence[float],
                   rng: RngStream, *, elite_pairing: bool = False
                   ) -> Tuple[Individual, Individual]:
    """Pick a crossover pair.

    ``probabilities`` are the full-population roulette weights, in the same
    (sorted) order as ``perfect + good + worst``. The first parent comes from
    the elite tiers (or from *worst* when the elite is empty); the second
    from the whole population, excluding the first parent unless the pool
    has a single member. With ``elite_pairing`` both come from the first
    parent's pool.
    """
    members = partition.perfect + partition.good + partition.worst
    n = len(members)
    if n == 0:
        raise ContractError("cannot select parents from an empty partition")
    p = np.asarray(probabilities, dtype=np.float64)
    if p.size != n:
        raise ContractError(f"expected {n} probabilities, got {p.size}")

    k = partition.elite_size
    pool = np.arange(k) if k > 0 else np.arange(k, n)
    first = int(pool[_draw_from(p[pool], rng)])

    second_pool = pool if elite_pairing else np.arange(n)
    if second_pool.size > 1:
        second_pool = second_pool[second_pool != first]
    second = int(second_pool[_draw_from(p[second_pool], rng)])
    return members[first], members[second]


def _draw_from(weights: np.ndarray, rng: RngStream) -> int:
    total = weights.sum()
    if total <= 0:
        # every weight underflowed: fall back to a uniform pick
        weights = np.full(weights.size, 1.0 / weights.size)
    else:
        weights = weights / total
    return roulette_select(weights, rng)


def crossover(p1, p2, gamma: float, rng: RngStream) -> Tuple[np.ndarray, np.ndarray]:
    """Extended arithmetic crossover, ``alpha_i ~ U(-gamma, 1 + gamma)`` per gene.

    Children are not clamped; the caller repairs them against its bounds.
    """
    p1 = np.asarray(p1, dtype=np.float64)
    p2 = np.asarray(p2, dtype=np.float64)
    if p1.shape != p2.shape:
        raise ContractError(f"parent shapes differ: {p1.shape} vs {p2.shape}")
    alpha = rng.uniform(-gamma, 1.0 + gamma, p1.shape)
    c1 = alpha * p1 + (1.0 - alpha) * p2
    c2 = alpha * p2 + (1.0 - alpha) * p1
    # blend of identical parents must reproduce them bit-for-bit
    same = p1 == p2
    if same.any():
        c1 = np.where(same, p1, c1)
        c2 = np.where(same, p1, c2)
    return c1, c2


def mutate(v, mu: float, spec: ObjectiveSpec, rng: RngStream, *,
           scale: float = 0.1, n_genes: int | None = None) -> np.ndarray:
    """Gaussian mutation of ``ceil(mu * n)`` distinct genes, then clamped.

    Each chosen gene moves by ``N(0, (scale * range_i)^2)``. ``n_genes``
    overrides the count.
    """
    v = np.asarray(v, dtype=np.float64)
    n = v.size
    if n_genes is None:
        n_genes = math.ceil(mu * n)
    n_genes = min(int(n_genes), n)
    out = v.copy()
    if n_genes == 0:
        return out
    idx = rng.choice(n, size=n_genes, replace=False)
    sigma = scale * spec.span[idx]
    out[idx] = v[idx] + sigma * rng.standard_normal(n_genes)
    return clamp_to_bounds(out, spec)


def offspring_counts(pc: float, pm: float, n_pop: int) -> Tuple[int, int]:
    """Crossover children ``2 * round(pc * nPop / 2)`` and mutants ``round(pm * nPop)``."""
    return 2 * _round_half_up(pc * n_pop / 2), _round_half_up(pm * n_pop)


def _round_half_up(x: float) -> int:
    # MATLAB-style rounding; Python's round() is banker's rounding
    return int(math.floor(x + 0.5))


def sort_population(pop: List[Individual]) -> List[Individual]:
    return sorted(pop, key=lambda ind: ind.cost)
