"""Small illustrative objectives and the two application objectives."""

from __future__ import annotations

import numpy as np

from ..core import ObjectiveSpec


def eq2_quadratic(a: float = 0.0, lower: float = -100.0, upper: float = 100.0) -> ObjectiveSpec:
    """1-D ``(x - a)^2``."""
    return ObjectiveSpec("EQ2", 1, lower, upper, lambda x: (x[0] - a) ** 2,
                         known_optimum=0.0, optimizer=[a] if lower <= a <= upper else None,
                         description=f"(x - {a})^2")


def eq3_rastrigin(n: int = 2, A: float = 10.0) -> ObjectiveSpec:
    def f(x):
        return A * x.size + np.sum(x ** 2 - A * np.cos(2.0 * np.pi * x))
    return ObjectiveSpec("EQ3", n, -5.12, 5.12, f, known_optimum=0.0,
                         optimizer=np.zeros(n), description=f"Rastrigin, A={A}")


# minimiser of x^2 + sin(x): root of 2x + cos(x) = 0
EQ4_ARGMIN = -0.45018361129487355
EQ4_MIN = EQ4_ARGMIN ** 2 + np.sin(EQ4_ARGMIN)


def eq4_quadratic_sine(lower: float = -10.0, upper: float = 10.0) -> ObjectiveSpec:
    return ObjectiveSpec("EQ4", 1, lower, upper, lambda x: x[0] ** 2 + np.sin(x[0]),
                         known_optimum=float(EQ4_MIN), optimizer=[EQ4_ARGMIN],
                         description="x^2 + sin(x)")


def app1_igg(n: int = 10, lower: float = -100.0, upper: float = 100.0) -> ObjectiveSpec:
    """Sum of affine terms ``0.41 + 0.001 x_i``; linear, so minimised at the lower corner."""
    def f(x):
        return np.sum(0.41 + 0.001 * x)
    return ObjectiveSpec("APP1", n, lower, upper, f,
                         known_optimum=n * (0.41 + 0.001 * lower),
                         optimizer=np.full(n, float(lower)),
                         description="IgG regression sum")


def app2_cps(A: float = 0.0, B: float = 0.0, C: float = 0.0, n: int = 10,
             lower: float = -100.0, upper: float = 100.0, absolute: bool = True
             ) -> ObjectiveSpec:
    """Cubic-sum ``F = sum x^3 + A sum x^2 + B sum x + C``.

    With ``absolute`` (the default) the objective is ``|F|``, i.e. the search
    drives ``F`` to zero; set it to False to minimise ``F`` itself.
    """
    for name, v in (("A", A), ("B", B), ("C", C)):
        if not np.isfinite(v):
            raise ValueError(f"{name} must be finite, got {v!r}")

    def f(x):
        value = np.sum(x ** 3) + A * np.sum(x ** 2) + B * np.sum(x) + C
        return abs(value) if absolute else value

    known, opt = None, None
    if absolute and C == 0.0:
        known, opt = 0.0, np.zeros(n)
    return ObjectiveSpec("APP2", n, lower, upper, f, known_optimum=known, optimizer=opt,
                         description=f"cubic sum A={A} B={B} C={C}")
