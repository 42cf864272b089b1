"""Objective-function catalog.

Identifiers: ``TF1``-``TF19`` (classical suite), ``CEC01``-``CEC10``
(CEC-C06 2019), ``EQ2``/``EQ3``/``EQ4`` (illustrative quadratic, Rastrigin,
quadratic-plus-sine) and the application objectives ``APP1`` and ``APP2``
(also reachable as ``EQ5`` and ``EQ6``).
"""

from __future__ import annotations

from typing import Callable, Dict, List, Optional

from ..core import ObjectiveSpec
from .applications import app1_igg, app2_cps, eq2_quadratic, eq3_rastrigin, eq4_quadratic_sine
from .cec2019 import CECDataError, cec2019_suite, load_shift_rotation
from .classical import classical_suite

ALIASES = {"EQ5": "APP1", "EQ6": "APP2"}

_FACTORIES: Dict[str, Callable[..., ObjectiveSpec]] = {
    "EQ2": eq2_quadratic,
    "EQ3": eq3_rastrigin,
    "EQ4": eq4_quadratic_sine,
    "APP1": app1_igg,
    "APP2": app2_cps,
}

CLASSICAL_IDS = tuple(f"TF{i}" for i in range(1, 20))
CEC_IDS = tuple(f"CEC{i:02d}" for i in range(1, 11))
FUNCTION_IDS = CLASSICAL_IDS + CEC_IDS + tuple(_FACTORIES)


class UnknownFunctionError(KeyError):
    def __str__(self):
        return self.args[0]


def canonical_id(name: str) -> str:
    key = name.strip().upper()
    key = ALIASES.get(key, key)
    if key not in FUNCTION_IDS:
        raise UnknownFunctionError(
            f"unknown function {name!r}; known: {', '.join(FUNCTION_IDS)}, "
            f"aliases: {', '.join(ALIASES)}"
        )
    return key


def get_function(name: str, *, dimension: Optional[int] = None,
                 cec_data_dir: Optional[str] = None, **params) -> ObjectiveSpec:
    """Build one catalog entry.

    ``dimension`` resizes TF1-TF13 (and is passed as ``n`` to EQ3/APP1/APP2);
    ``params`` go to the EQ/APP factories, e.g. ``get_function("EQ2", a=3)``.
    """
    key = canonical_id(name)
    if key in _FACTORIES:
        if dimension is not None:
            if key in ("EQ2", "EQ4"):
                raise ValueError(f"{key} is one-dimensional")
            params["n"] = dimension
        return _FACTORIES[key](**params)
    if params:
        raise ValueError(f"{key} takes no parameters, got {sorted(params)}")
    if key in CLASSICAL_IDS and int(key[2:]) <= 13:
        return classical_suite(30 if dimension is None else dimension)[key]
    spec = classical_suite()[key] if key in CLASSICAL_IDS else cec2019_suite(cec_data_dir)[key]
    if dimension is not None and dimension != spec.dimension:
        raise ValueError(f"{key} has a fixed dimension of {spec.dimension}")
    return spec


def catalog(cec_data_dir: Optional[str] = None) -> Dict[str, ObjectiveSpec]:
    """Every identifier mapped to its default-parameter ObjectiveSpec."""
    entries = dict(classical_suite())
    entries.update(cec2019_suite(cec_data_dir))
    entries.update({k: f() for k, f in _FACTORIES.items()})
    return entries


def list_functions() -> List[str]:
    return list(FUNCTION_IDS)


__all__ = [
    "ALIASES", "CECDataError", "FUNCTION_IDS", "UnknownFunctionError",
    "app1_igg", "app2_cps", "canonical_id", "catalog", "cec2019_suite",
    "classical_suite", "eq2_quadratic", "eq3_rastrigin", "eq4_quadratic_sine",
    "get_function", "list_functions", "load_shift_rotation",
]
