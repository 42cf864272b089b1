"""Command line entry point: ``lpbsa run | list-functions | single``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from ..algorithms import ALGORITHMS, run_algorithm
from ..benchmarks import FUNCTION_IDS, UnknownFunctionError, canonical_id, catalog
from ..core import AlgorithmConfig, ConfigError, NonFiniteCostError, make_rng
from .plan import CONFIG_KEYS, PlanError, config_value, scalar_value, build_function, parse_plan
from .runner import ExperimentAbort, emit_convergence, execute, fmt

EXIT_OK, EXIT_INVALID, EXIT_ABORT = 0, 1, 2


def _key_values(pairs: List[str], what: str) -> dict:
    out = {}
    for pair in pairs or []:
        if "=" not in pair:
            raise PlanError(what, f"expected key=value, got {pair!r}")
        k, v = pair.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lpbsa", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="execute a plan file")
    run.add_argument("plan", help="path to the plan file")
    run.add_argument("--jobs", type=int, help="parallel worker processes")
    run.add_argument("--output-dir", help="override the plan's output directory")
    run.add_argument("--runs", type=int, help="override replicates per cell")
    run.add_argument("--base-seed", type=int, help="override the base seed")
    run.add_argument("--max-iterations", type=int, help="override MaxIt for all algorithms")

    sub.add_parser("list-functions", help="print the catalog identifiers")

    single = sub.add_parser("single", help="one seeded run, result as JSON")
    single.add_argument("--function", required=True)
    single.add_argument("--algorithm", required=True, type=str.upper, choices=ALGORITHMS)
    single.add_argument("--seed", type=int, default=0)
    single.add_argument("--param", action="append", metavar="KEY=VALUE",
                        help="algorithm setting, e.g. --param pc=0.8 (repeatable)")
    single.add_argument("--function-param", action="append", metavar="KEY=VALUE",
                        help="objective parameter, e.g. --function-param a=3")
    single.add_argument("--cec-data-dir")
    single.add_argument("--convergence", help="write the convergence curve to this file")
    return parser


def _cmd_run(args) -> int:
    plan = parse_plan(args.plan)
    if args.output_dir is not None:
        plan.output_dir = args.output_dir
    if args.runs is not None:
        plan.runs = args.runs
    if args.base_seed is not None:
        plan.base_seed = args.base_seed
    if args.max_iterations is not None:
        for values in plan.overrides.values():
            values.pop("max_iterations", None)
        plan.overrides.setdefault("*", {})["max_iterations"] = args.max_iterations
    if args.jobs is not None:
        plan.jobs = args.jobs
    plan.validate()
    report = execute(plan)
    for (fn, alg), s in report.summaries.items():
        print(f"{fn:6s} {alg:6s} mean={fmt(s.mean)} std={fmt(s.std)} n={s.n}")
    print(f"results written to {Path(plan.output_dir).resolve()}")
    return EXIT_OK


def _cmd_list(_args) -> int:
    entries = catalog()
    for fid in FUNCTION_IDS:
        spec = entries[fid]
        print(f"{fid:6s} dim={spec.dimension:<3d} {spec.description}")
    return EXIT_OK


def _cmd_single(args) -> int:
    raw = _key_values(args.param, "param")
    unknown = sorted(set(raw) - set(CONFIG_KEYS))
    if unknown:
        raise PlanError(unknown[0], "unknown algorithm setting; allowed: " + ", ".join(CONFIG_KEYS))
    params = {k: config_value(k, v) for k, v in raw.items()}
    params["seed"] = args.seed
    config = AlgorithmConfig.for_algorithm(args.algorithm, **params)
    fparams = {k: scalar_value(k, v) for k, v in _key_values(args.function_param, "function-param").items()}
    fid = canonical_id(args.function)
    spec = build_function(fid, fparams, args.cec_data_dir)
    try:
        trace = run_algorithm(args.algorithm, spec, config, make_rng(config.seed))
    except NonFiniteCostError as exc:
        raise ExperimentAbort(fid, args.algorithm, 0, exc) from exc
    if args.convergence:
        emit_convergence(trace, args.convergence)
    print(json.dumps({
        "function": fid,
        "algorithm": args.algorithm,
        "seed": args.seed,
        "best_cost": trace.best_cost,
        "best_position": trace.best_individual.position.tolist(),
        "evaluations": trace.evaluations,
    }))
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {"run": _cmd_run, "list-functions": _cmd_list, "single": _cmd_single}
    try:
        return handlers[args.command](args)
    except (PlanError, ConfigError, UnknownFunctionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (ExperimentAbort, NonFiniteCostError, OSError) as exc:
        print(f"aborted: {exc}", file=sys.stderr)
        return EXIT_ABORT


if __name__ == "__main__":
    sys.exit(main())
