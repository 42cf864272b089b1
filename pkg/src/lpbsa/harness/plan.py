"""Experiment plan files.

A plan is an INI-style text file. Keys before any section header (or under
``[experiment]``) describe the batch; any :class:`AlgorithmConfig` field
placed there applies to every algorithm, and ``[LPB]`` / ``[LPBSA]`` /
``[SA]`` sections override per algorithm. ``[function:ID]`` sections pass
parameters to parameterised objectives (EQ2, EQ3, EQ4, APP1, APP2)::

    functions = TF1, TF18
    algorithms = LPB, LPBSA
    runs = 30
    max_iterations = 1000

    [LPBSA]
    initial_temperature = 100

    [function:EQ2]
    a = 3
"""

from __future__ import annotations

import configparser
import os
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional

from ..algorithms import ALGORITHMS
from ..benchmarks import UnknownFunctionError, canonical_id, get_function
from ..core import AlgorithmConfig, ConfigError

EXPERIMENT_KEYS = ("functions", "algorithms", "runs", "base_seed", "output_dir",
                   "baseline", "cec_data_dir", "jobs", "dimension")
CONFIG_KEYS = tuple(AlgorithmConfig.field_names())
_BOOL_WORDS = {"true": True, "yes": True, "on": True, "false": False, "no": False, "off": False}


class PlanError(ValueError):
    """Problem in a plan file; ``field`` names the offending key or section."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


def build_function(function: str, params=None, cec_data_dir=None, dimension=None):
    """Resolve a catalog id; ``dimension`` only resizes the scalable TF1-TF13."""
    scalable = function.startswith("TF") and int(function[2:]) <= 13
    return get_function(function, dimension=dimension if scalable else None,
                        cec_data_dir=cec_data_dir, **dict(params or {}))


def default_output_dir() -> str:
    return os.environ.get("OPT_OUTPUT_DIR", "results")


@dataclass
class ExperimentPlan:
    functions: List[str]
    algorithms: List[str]
    runs: int = 30
    overrides: Dict[str, Dict[str, object]] = field(default_factory=dict)
    base_seed: int = 0
    output_dir: str = field(default_factory=default_output_dir)
    baseline: Optional[str] = None
    cec_data_dir: Optional[str] = None
    function_params: Dict[str, Dict[str, object]] = field(default_factory=dict)
    jobs: int = 1
    dimension: Optional[int] = None

    def __post_init__(self):
        self.validate()

    @property
    def baseline_algorithm(self) -> str:
        if self.baseline is not None:
            return self.baseline
        return "LPB" if "LPB" in self.algorithms else self.algorithms[0]

    def config_for(self, algorithm: str) -> AlgorithmConfig:
        params = dict(self.overrides.get("*", {}))
        params.update(self.overrides.get(algorithm, {}))
        try:
            return AlgorithmConfig.for_algorithm(algorithm, **params)
        except ConfigError:
            raise
        except TypeError as exc:
            raise PlanError(algorithm, str(exc)) from exc

    def function_spec(self, function: str):
        return build_function(function, self.function_params.get(function, {}),
                              self.cec_data_dir, self.dimension)

    def validate(self) -> None:
        """Fail fast: every id resolves and every config builds."""
        if not self.functions:
            raise PlanError("functions", "at least one function is required")
        if not self.algorithms:
            raise PlanError("algorithms", "at least one algorithm is required")
        try:
            self.functions = [canonical_id(f) for f in self.functions]
        except UnknownFunctionError as exc:
            raise PlanError("functions", str(exc)) from exc
        algs = []
        for a in self.algorithms:
            key = a.strip().upper()
            if key not in ALGORITHMS:
                raise PlanError("algorithms", f"unknown algorithm {a!r}; choose from {', '.join(ALGORITHMS)}")
            algs.append(key)
        self.algorithms = algs
        if self.baseline is not None:
            self.baseline = self.baseline.strip().upper()
            if self.baseline not in self.algorithms:
                raise PlanError("baseline", f"{self.baseline!r} is not among the plan's algorithms")
        if self.runs < 1:
            raise PlanError("runs", f"must be at least 1, got {self.runs}")
        if self.jobs < 1:
            raise PlanError("jobs", f"must be at least 1, got {self.jobs}")
        if self.dimension is not None and self.dimension < 1:
            raise PlanError("dimension", f"must be positive, got {self.dimension}")
        for alg in self.algorithms:
            self.config_for(alg)
        for fn in self.functions:
            try:
                self.function_spec(fn)
            except (TypeError, ValueError) as exc:
                raise PlanError(f"function:{fn}", str(exc)) from exc

    def to_dict(self) -> dict:
        return {
            "functions": list(self.functions),
            "algorithms": list(self.algorithms),
            "runs": self.runs,
            "base_seed": self.base_seed,
            "output_dir": str(self.output_dir),
            "baseline": self.baseline_algorithm,
            "cec_data_dir": self.cec_data_dir,
            "dimension": self.dimension,
            "jobs": self.jobs,
            "overrides": {k: dict(v) for k, v in self.overrides.items()},
            "function_params": {k: dict(v) for k, v in self.function_params.items()},
            "configs": {a: self.config_for(a).to_dict() for a in self.algorithms},
        }


def _split_list(raw: str) -> List[str]:
    raw = raw.strip().strip("[]")
    return [tok.strip().strip("'\"") for tok in re.split(r"[,\s]+", raw) if tok.strip()]


def scalar_value(key: str, raw: str):
    text = raw.strip().strip("'\"")
    if text.lower() in _BOOL_WORDS:
        return _BOOL_WORDS[text.lower()]
    for conv in (int, float):
        try:
            return conv(text)
        except ValueError:
            pass
    if text.lower() in ("inf", "+inf", "infinity"):
        return float("inf")
    raise PlanError(key, f"expected a number or boolean, got {raw!r}")


def _int(key: str, raw: str) -> int:
    value = scalar_value(key, raw)
    if isinstance(value, bool) or not float(value).is_integer():
        raise PlanError(key, f"expected an integer, got {raw!r}")
    return int(value)


def config_value(key: str, raw: str):
    value = scalar_value(key, raw)
    if key in ("max_iterations", "population_size", "seed"):
        return _int(key, raw)
    if key == "elite_pairing":
        if not isinstance(value, bool):
            raise PlanError(key, f"expected true/false, got {raw!r}")
        return value
    if isinstance(value, bool):
        raise PlanError(key, f"expected a number, got {raw!r}")
    return float(value)


def parse_plan_text(text: str, *, source: str = "<plan>") -> ExperimentPlan:
    if not re.match(r"\s*(?:[#;][^\n]*\n\s*)*\[", text):
        text = "[experiment]\n" + text
    parser = configparser.ConfigParser(interpolation=None, inline_comment_prefixes=("#", ";"))
    parser.optionxform = str
    try:
        parser.read_string(text, source=source)
    except configparser.Error as exc:
        raise PlanError("syntax", str(exc)) from exc

    kwargs: Dict[str, object] = {}
    overrides: Dict[str, Dict[str, object]] = {}
    function_params: Dict[str, Dict[str, object]] = {}

    for section in parser.sections():
        items = parser.items(section)
        sec = section.strip()
        if sec.lower() == "experiment":
            for key, raw in items:
                if key in ("functions", "algorithms"):
                    kwargs[key] = _split_list(raw)
                elif key in ("runs", "base_seed", "jobs", "dimension"):
                    kwargs[key] = _int(key, raw)
                elif key in ("output_dir", "baseline", "cec_data_dir"):
                    kwargs[key] = raw.strip().strip("'\"")
                elif key in CONFIG_KEYS:
                    overrides.setdefault("*", {})[key] = config_value(key, raw)
                else:
                    raise PlanError(key, "unknown key; allowed: "
                                    + ", ".join(EXPERIMENT_KEYS + CONFIG_KEYS))
        elif sec.upper() in ALGORITHMS:
            alg = sec.upper()
            for key, raw in items:
                if key not in CONFIG_KEYS:
                    raise PlanError(f"{alg}.{key}", "unknown key; allowed: " + ", ".join(CONFIG_KEYS))
                overrides.setdefault(alg, {})[key] = config_value(key, raw)
        elif sec.lower().startswith("function:"):
            try:
                fn = canonical_id(sec.split(":", 1)[1])
            except UnknownFunctionError as exc:
                raise PlanError(sec, str(exc)) from exc
            function_params[fn] = {k: scalar_value(f"{sec}.{k}", v) for k, v in items}
        else:
            raise PlanError(sec, "unknown section; expected [experiment], an algorithm "
                            "name or [function:ID]")

    for required in ("functions", "algorithms"):
        if required not in kwargs:
            raise PlanError(required, "missing required key")
    return ExperimentPlan(overrides=overrides, function_params=function_params, **kwargs)


def parse_plan(file) -> ExperimentPlan:
    path = Path(file)
    try:
        text = path.read_text()
    except FileNotFoundError as exc:
        raise PlanError("file", f"plan file {str(path)!r} not found") from exc
    except OSError as exc:
        raise PlanError("file", f"cannot read {str(path)!r}: {exc}") from exc
    return parse_plan_text(text, source=str(path))
