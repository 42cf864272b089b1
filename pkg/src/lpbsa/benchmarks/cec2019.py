"""CEC-C06 2019 ("100-digit challenge") functions CEC01-CEC10.

Every function carries a +1 offset so the global optimum value is 1.
CEC04-CEC10 are shifted and rotated; the official shift vectors and
rotation matrices are not bundled. Drop them into a directory as plain
text files named ``CEC04.txt`` ... ``CEC10.txt`` holding whitespace
separated numbers: the dimension ``n``, then the ``n x n`` rotation matrix
row by row, then the ``n`` shift values. Without a file a function uses
the identity rotation and zero shift.
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import Optional, Tuple

import numpy as np

from ..core import ObjectiveSpec

CEC_DIMENSION = 10


class CECDataError(ValueError):
    pass


# -- CEC01: Storn's Chebyshev polynomial fitting (9-D) -------------------

def _chebyshev_target(n: int) -> float:
    """T_{n-1}(1.2), the value the fitted polynomial must reach at +-1.2."""
    a, b = 1.0, 1.2
    for _ in range(n - 2):
        a, b = b, 2.4 * b - a
    return b


def storn_chebyshev(x):
    n = x.size
    d = _chebyshev_target(n)
    m = 32 * n
    grid = np.linspace(-1.0, 1.0, m + 1)
    # polyval uses the highest-degree-first convention, matching Horner on x
    p_grid = np.polyval(x, grid)
    w = np.where(p_grid > 1.0, (p_grid - 1.0) ** 2,
                 np.where(p_grid < -1.0, (p_grid + 1.0) ** 2, 0.0))
    u = np.polyval(x, 1.2)
    v = np.polyval(x, -1.2)
    pu = (u - d) ** 2 if u < d else 0.0
    pv = (v - d) ** 2 if v < d else 0.0
    return pu + pv + np.sum(w)


# -- CEC02: inverse Hilbert matrix (16-D) -------------------------------

def _hilbert(k: int) -> np.ndarray:
    i = np.arange(1, k + 1)
    return 1.0 / (i[:, None] + i[None, :] - 1.0)


def inverse_hilbert(x):
    k = math.isqrt(x.size)
    z = x.reshape(k, k)
    return np.sum(np.abs(_hilbert(k) @ z - np.eye(k)))


# -- CEC03: Lennard-Jones minimum energy cluster (18-D, 6 atoms) --------

LJ6_MIN_ENERGY = 12.7120622568


def lennard_jones(x):
    atoms = x.reshape(-1, 3)
    diff = atoms[:, None, :] - atoms[None, :, :]
    r2 = np.sum(diff ** 2, axis=-1)
    iu = np.triu_indices(atoms.shape[0], k=1)
    # coincident atoms: cap the singularity so the value stays finite
    r6 = np.maximum(r2[iu], 1e-12) ** 3
    return LJ6_MIN_ENERGY + np.sum((1.0 / r6 - 2.0) / r6)


def octahedron_cluster() -> np.ndarray:
    """Six atoms on an octahedron at the energy-minimising edge length."""
    a12 = 12.0 + 3.0 / 64.0
    a6 = 12.0 + 3.0 / 8.0
    edge = (a12 / a6) ** (1.0 / 6.0)
    h = edge / math.sqrt(2.0)
    pts = np.array([[h, 0, 0], [-h, 0, 0], [0, h, 0], [0, -h, 0], [0, 0, h], [0, 0, -h]])
    return pts.ravel()


# -- CEC04-CEC10 base functions (z already shifted, scaled and rotated) --

def rastrigin(z):
    return np.sum(z ** 2 - 10.0 * np.cos(2.0 * np.pi * z) + 10.0)


def griewank(z):
    i = np.arange(1, z.size + 1)
    return np.sum(z ** 2) / 4000.0 - np.prod(np.cos(z / np.sqrt(i))) + 1.0


def weierstrass(z, a=0.5, b=3.0, kmax=20):
    k = np.arange(kmax + 1)
    ak = a ** k
    bk = b ** k
    outer = np.sum(ak * np.cos(2.0 * np.pi * bk * (z[:, None] + 0.5)))
    return outer - z.size * np.sum(ak * np.cos(np.pi * bk))


def modified_schwefel(z):
    n = z.size
    z = z + 4.209687462275036e2
    total = 0.0
    for zi in z:
        if zi > 500.0:
            r = 500.0 - math.fmod(zi, 500.0)
            total -= r * math.sin(math.sqrt(r))
            total += (zi - 500.0) ** 2 / (10000.0 * n)
        elif zi < -500.0:
            r = -500.0 + math.fmod(abs(zi), 500.0)
            total -= r * math.sin(math.sqrt(abs(r)))
            total += (zi + 500.0) ** 2 / (10000.0 * n)
        else:
            total -= zi * math.sin(math.sqrt(abs(zi)))
    return total + 4.189828872724338e2 * n


def expanded_schaffer_f6(z):
    x = z
    y = np.roll(z, -1)
    s = x ** 2 + y ** 2
    return np.sum(0.5 + (np.sin(np.sqrt(s)) ** 2 - 0.5) / (1.0 + 0.001 * s) ** 2)


def happy_cat(z, alpha=0.125):
    n = z.size
    z = z - 1.0
    r2 = np.sum(z ** 2)
    return abs(r2 - n) ** (2.0 * alpha) + (0.5 * r2 + np.sum(z)) / n + 0.5


def ackley(z):
    n = z.size
    return (-20.0 * np.exp(-0.2 * np.sqrt(np.sum(z ** 2) / n))
            - np.exp(np.sum(np.cos(2.0 * np.pi * z)) / n) + 20.0 + np.e)


# id -> (base function, input scale applied before rotation, description)
_SHIFTED = {
    "CEC04": (rastrigin, 5.12 / 100.0, "shifted rotated Rastrigin"),
    "CEC05": (griewank, 600.0 / 100.0, "shifted rotated Griewank"),
    "CEC06": (weierstrass, 0.5 / 100.0, "shifted rotated Weierstrass"),
    "CEC07": (modified_schwefel, 1000.0 / 100.0, "shifted rotated modified Schwefel"),
    "CEC08": (expanded_schaffer_f6, 1.0, "shifted rotated expanded Schaffer F6"),
    "CEC09": (happy_cat, 5.0 / 100.0, "shifted rotated happy cat"),
    "CEC10": (ackley, 1.0, "shifted rotated Ackley"),
}


def load_shift_rotation(path, dimension: int = CEC_DIMENSION) -> Tuple[np.ndarray, np.ndarray]:
    """Read ``n``, an ``n x n`` rotation and an ``n``-vector shift from ``path``."""
    path = Path(path)
    try:
        tokens = path.read_text().split()
        values = np.array([float(t) for t in tokens])
    except (OSError, ValueError) as exc:
        raise CECDataError(f"{path}: cannot read numeric data ({exc})") from exc
    expected = 1 + dimension * dimension + dimension
    shape_msg = (f"expected dimension {dimension} followed by a {dimension}x{dimension} "
                 f"matrix and a {dimension}-vector ({expected} numbers)")
    if values.size == 0 or values[0] != dimension:
        raise CECDataError(f"{path}: {shape_msg}, got leading value "
                           f"{values[0] if values.size else 'nothing'}")
    if values.size != expected:
        raise CECDataError(f"{path}: {shape_msg}, got {values.size} numbers")
    m = values[1:1 + dimension * dimension].reshape(dimension, dimension)
    shift = values[1 + dimension * dimension:]
    return m, shift


def _shifted_rotated(base, scale, rotation, shift):
    def f(x):
        z = rotation @ (scale * (x - shift))
        return base(z) + 1.0
    return f


def _offset(fn):
    def f(x):
        return fn(x) + 1.0
    return f


def cec2019_suite(data_dir: Optional[str] = None) -> dict:
    """CEC01-CEC10 keyed by identifier."""
    chebyshev_opt = np.zeros(9)
    # coefficients of T_8, highest degree first
    chebyshev_opt[:] = [128.0, 0.0, -256.0, 0.0, 160.0, 0.0, -32.0, 0.0, 1.0]
    suite = {
        "CEC01": ObjectiveSpec("CEC01", 9, -8192.0, 8192.0, _offset(storn_chebyshev), 1.0,
                               chebyshev_opt, description="Storn's Chebyshev polynomial fitting"),
        "CEC02": ObjectiveSpec("CEC02", 16, -16384.0, 16384.0, _offset(inverse_hilbert), 1.0,
                               np.linalg.inv(_hilbert(4)).round().ravel(),
                               description="inverse Hilbert matrix"),
        "CEC03": ObjectiveSpec("CEC03", 18, -4.0, 4.0, _offset(lennard_jones), 1.0,
                               octahedron_cluster(),
                               description="Lennard-Jones minimum energy cluster"),
    }
    for name, (base, scale, desc) in _SHIFTED.items():
        rotation, shift = np.eye(CEC_DIMENSION), np.zeros(CEC_DIMENSION)
        if data_dir is not None:
            path = Path(data_dir) / f"{name}.txt"
            if path.exists():
                rotation, shift = load_shift_rotation(path)
        suite[name] = ObjectiveSpec(
            name, CEC_DIMENSION, -100.0, 100.0,
            _shifted_rotated(base, scale, rotation, shift), 1.0, shift.copy(),
            description=desc,
        )
    return suite
