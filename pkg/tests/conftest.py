import numpy as np
import pytest

from lpbsa import ObjectiveSpec


class ScriptedRng:
    """Replays pre-recorded draws for the four generator methods the operators use."""

    def __init__(self, random=(), uniform=(), normal=(), choice=()):
        self._random = list(random)
        self._uniform = list(uniform)
        self._normal = list(normal)
        self._choice = list(choice)

    def random(self):
        return self._random.pop(0)

    def uniform(self, low, high, size=None):
        return np.asarray(self._uniform.pop(0), dtype=float)

    def standard_normal(self, n):
        return np.asarray(self._normal.pop(0), dtype=float)

    def choice(self, n, size=None, replace=True):
        return np.asarray(self._choice.pop(0), dtype=int)


def sphere_spec(dim=3, lo=-5.0, hi=5.0):
    return ObjectiveSpec("sphere", dim, np.full(dim, lo), np.full(dim, hi),
                         lambda x: float(np.sum(x * x)), known_optimum=0.0,
                         optimizer=np.zeros(dim))


@pytest.fixture
def sphere():
    return sphere_spec()
