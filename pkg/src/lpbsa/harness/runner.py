"""Batch execution and report / convergence-file output."""

from __future__ import annotations

import csv
import datetime as _dt
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .. import __version__
from ..algorithms import run_algorithm
from ..core import NonFiniteCostError, RunTrace, make_rng
from ..stats import SampleSummary, significance_table, summarize
from .plan import ExperimentPlan, build_function

Cell = Tuple[str, str]

SUMMARY_COLUMNS = ("function", "algorithm", "mean", "std", "best", "worst", "runs")
PVALUE_COLUMNS = ("function", "algorithm", "p_value_vs_baseline")


class ExperimentAbort(RuntimeError):
    def __init__(self, function: str, algorithm: str, replicate: int, cause: Exception):
        super().__init__(f"{function}/{algorithm} replicate {replicate}: {cause}")
        self.function = function
        self.algorithm = algorithm
        self.replicate = replicate
        self.cause = cause


def fmt(value: float) -> str:
    """Nine significant digits, the report-wide number format."""
    return f"{value:.9g}"


@dataclass
class ExperimentReport:
    summaries: Dict[Cell, SampleSummary]
    p_values: Dict[str, Dict[str, Optional[float]]]
    baseline: str
    final_costs: Dict[Cell, List[float]]
    provenance: dict
    traces: Dict[Cell, List[RunTrace]] = field(default_factory=dict, repr=False)

    def summary_rows(self) -> List[List[str]]:
        rows = []
        for (fn, alg), s in self.summaries.items():
            rows.append([fn, alg, fmt(s.mean), fmt(s.std), fmt(s.best), fmt(s.worst), str(s.n)])
        return rows

    def pvalue_rows(self) -> List[List[str]]:
        rows = []
        for fn, row in self.p_values.items():
            for alg, p in row.items():
                rows.append([fn, alg, "" if p is None else fmt(p)])
        return rows


# workers rebuild objectives from ids: catalog closures do not pickle
_cached_spec = lru_cache(maxsize=64)(build_function)


def _run_task(task) -> RunTrace:
    function, params, cec_dir, dimension, algorithm, config, replicate = task
    spec = _cached_spec(function, params, cec_dir, dimension)
    try:
        return run_algorithm(algorithm, spec, config, make_rng(config.seed))
    except NonFiniteCostError as exc:
        raise ExperimentAbort(function, algorithm, replicate, exc) from exc


def _tasks(plan: ExperimentPlan):
    for fn in plan.functions:
        params = tuple(sorted(plan.function_params.get(fn, {}).items()))
        for alg in plan.algorithms:
            cfg = plan.config_for(alg)
            for i in range(plan.runs):
                yield (fn, params, plan.cec_data_dir, plan.dimension, alg,
                       cfg.replace(seed=plan.base_seed + i), i)


def _now() -> str:
    return _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")


def execute(plan: ExperimentPlan, *, jobs: Optional[int] = None, write: bool = True,
            keep_traces: bool = True) -> ExperimentReport:
    """Run every (function, algorithm, replicate) cell of ``plan``.

    Replicate ``i`` of every cell uses seed ``base_seed + i`` so algorithms
    are compared on paired seeds. Results are collected after all workers
    finish and ordered by (function, algorithm, replicate). With ``write``
    the summary, p-value table, JSON report and one convergence file per
    run are written under ``plan.output_dir``.
    """
    jobs = plan.jobs if jobs is None else jobs
    started = _now()
    tasks = list(_tasks(plan))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            traces = list(pool.map(_run_task, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        traces = [_run_task(t) for t in tasks]

    by_cell: Dict[Cell, List[RunTrace]] = {}
    for task, trace in zip(tasks, traces):
        by_cell.setdefault((task[0], task[4]), []).append(trace)

    final_costs = {cell: [t.best_cost for t in ts] for cell, ts in by_cell.items()}
    summaries = {cell: summarize(costs) for cell, costs in final_costs.items()}
    baseline = plan.baseline_algorithm
    p_values = significance_table(final_costs, baseline, plan.functions, plan.algorithms)
    report = ExperimentReport(
        summaries=summaries,
        p_values=p_values,
        baseline=baseline,
        final_costs=final_costs,
        provenance={
            "tool": "lpbsa",
            "version": __version__,
            "plan": plan.to_dict(),
            "started": started,
            "finished": _now(),
        },
        traces=by_cell if keep_traces else {},
    )
    if write:
        out = Path(plan.output_dir)
        emit_report(report, out)
        conv = out / "convergence"
        for (fn, alg), ts in by_cell.items():
            for i, t in enumerate(ts):
                emit_convergence(t, conv / f"{fn}_{alg}_r{i:03d}.dat")
    return report


def emit_convergence(trace: RunTrace, path) -> Path:
    """Write ``# iteration best_cost`` followed by one row per iteration."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = ["# iteration best_cost"]
    lines += [f"{i} {c:.17g}" for i, c in enumerate(trace.best_costs, start=1)]
    path.write_text("\n".join(lines) + "\n")
    return path


def read_convergence(path) -> np.ndarray:
    """Inverse of :func:`emit_convergence`: an ``(n, 2)`` array."""
    rows = [line.split() for line in Path(path).read_text().splitlines()
            if line.strip() and not line.lstrip().startswith("#")]
    return np.array(rows, dtype=np.float64).reshape(-1, 2)


def emit_report(report: ExperimentReport, directory) -> Dict[str, Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = {
        "summary": directory / "summary.csv",
        "pvalues": directory / "pvalues.csv",
        "report": directory / "report.json",
    }
    summary_rows = report.summary_rows()
    pvalue_rows = report.pvalue_rows()
    _write_csv(paths["summary"], SUMMARY_COLUMNS, summary_rows)
    _write_csv(paths["pvalues"], PVALUE_COLUMNS, pvalue_rows)
    doc = {
        "summary": [dict(zip(SUMMARY_COLUMNS, r)) for r in summary_rows],
        "p_values": [dict(zip(PVALUE_COLUMNS, r)) for r in pvalue_rows],
        "baseline": report.baseline,
        "final_costs": [
            {"function": fn, "algorithm": alg, "values": [fmt(v) for v in vals]}
            for (fn, alg), vals in report.final_costs.items()
        ],
        "provenance": report.provenance,
    }
    paths["report"].write_text(json.dumps(doc, indent=2, default=_json_default) + "\n")
    return paths


def _json_default(obj):
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _write_csv(path: Path, header: Sequence[str], rows) -> None:
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
