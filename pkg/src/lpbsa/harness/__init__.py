"""Experiment plans, batch execution, report files and the CLI."""

from .plan import ExperimentPlan, PlanError, parse_plan, parse_plan_text
from .runner import (
    ExperimentAbort,
    ExperimentReport,
    emit_convergence,
    emit_report,
    execute,
    read_convergence,
)

__all__ = [
    "ExperimentAbort", "ExperimentPlan", "ExperimentReport", "PlanError",
    "emit_convergence", "emit_report", "execute", "parse_plan", "parse_plan_text",
    "read_convergence",
]
