"""Replicate summaries and the two-sided Wilcoxon rank-sum test."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

import numpy as np
from scipy.special import ndtr
from scipy.stats import rankdata

from .core import ContractError

EXACT_MAX_TOTAL = 20


@dataclass(frozen=True)
class SampleSummary:
    mean: float
    std: float
    n: int
    best: float
    worst: float


def summarize(final_costs: Sequence[float]) -> SampleSummary:
    """Mean, sample std (n - 1 denominator, 0 for a single value), min and max."""
    x = np.asarray(final_costs, dtype=np.float64)
    if x.size == 0:
        raise ContractError("summarize needs at least one value")
    std = float(np.std(x, ddof=1)) if x.size > 1 else 0.0
    mean = float(np.mean(x))
    best, worst = float(x.min()), float(x.max())
    # keep best <= mean <= worst despite summation rounding
    mean = min(max(mean, best), worst)
    return SampleSummary(mean=mean, std=std, n=int(x.size), best=best, worst=worst)


def _doubled_ranks(a, b) -> Tuple[np.ndarray, int]:
    pooled = np.concatenate([a, b])
    # mid-ranks are half-integers; doubling keeps all arithmetic exact
    ranks2 = np.rint(2.0 * rankdata(pooled)).astype(np.int64)
    return ranks2, len(a)


def rank_sum_distribution(ranks2: Sequence[int], k: int) -> Dict[int, int]:
    """Count the size-``k`` subsets of ``ranks2`` by their sum.

    A subset-sum DP over the pooled (doubled) mid-ranks; equivalent to
    enumerating every assignment of ``k`` pooled observations to the first
    sample.
    """
    # table[j] maps subset sum -> number of j-element subsets
    table = [dict() for _ in range(k + 1)]
    table[0][0] = 1
    for r in ranks2:
        r = int(r)
        for j in range(min(k, len(table) - 1), 0, -1):
            prev = table[j - 1]
            if not prev:
                continue
            cur = table[j]
            for s, c in prev.items():
                cur[s + r] = cur.get(s + r, 0) + c
    return table[k]


def _exact_p(a, b) -> float:
    ranks2, k = _doubled_ranks(a, b)
    n = ranks2.size
    w_obs = int(ranks2[:k].sum())
    # 2*E[W] scaled by n so every quantity is an integer
    center_n = k * int(ranks2.sum())
    dev_obs = abs(n * w_obs - center_n)
    dist = rank_sum_distribution(ranks2, k)
    hits = sum(c for s, c in dist.items() if abs(n * s - center_n) >= dev_obs)
    return min(1.0, hits / math.comb(n, k))


def _normal_p(a, b) -> float:
    n1, n2 = len(a), len(b)
    n = n1 + n2
    ranks = rankdata(np.concatenate([a, b]))
    u = ranks[:n1].sum() - n1 * (n1 + 1) / 2.0
    _, counts = np.unique(ranks, return_counts=True)
    tie = np.sum(counts.astype(float) ** 3 - counts)
    var = n1 * n2 / 12.0 * ((n + 1) - tie / (n * (n - 1)))
    if var <= 0:
        return 1.0
    z = (abs(u - n1 * n2 / 2.0) - 0.5) / math.sqrt(var)
    if z <= 0:
        return 1.0
    return min(1.0, 2.0 * float(ndtr(-z)))


def wilcoxon_rank_sum(a: Sequence[float], b: Sequence[float], *,
                      method: str = "auto") -> float:
    """Two-sided rank-sum p-value.

    ``method="auto"`` uses the exact permutation distribution (ties handled
    through mid-ranks) when ``len(a) + len(b) <= 20`` and the tie-corrected
    normal approximation with continuity correction otherwise. ``"exact"``
    and ``"normal"`` force one path.
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.size < 1 or b.size < 1:
        raise ContractError("both samples need at least one value")
    if method == "auto":
        method = "exact" if a.size + b.size <= EXACT_MAX_TOTAL else "normal"
    if method == "exact":
        return _exact_p(a, b)
    if method == "normal":
        return _normal_p(a, b)
    raise ValueError(f"unknown method {method!r}")


def significance_table(results: Mapping[Tuple[str, str], Sequence[float]], baseline: str,
                       functions: Optional[Iterable[str]] = None,
                       algorithms: Optional[Iterable[str]] = None
                       ) -> Dict[str, Dict[str, Optional[float]]]:
    """``{function: {algorithm: p vs baseline}}``; missing samples map to None.

    Row and column order follow ``functions`` / ``algorithms`` when given,
    otherwise first appearance in ``results``.
    """
    if functions is None:
        functions = list(dict.fromkeys(f for f, _ in results))
    if algorithms is None:
        algorithms = list(dict.fromkeys(a for _, a in results))
    algorithms = list(algorithms)
    table: Dict[str, Dict[str, Optional[float]]] = {}
    for fn in functions:
        base = results.get((fn, baseline))
        row: Dict[str, Optional[float]] = {}
        for alg in algorithms:
            sample = results.get((fn, alg))
            if base is None or sample is None or len(base) == 0 or len(sample) == 0:
                row[alg] = None
            else:
                row[alg] = wilcoxon_rank_sum(sample, base)
        table[fn] = row
    return table
