"""The nineteen classical test functions TF1-TF19.

TF1-TF7 are unimodal, TF8-TF13 multimodal (both 30-D by default), TF14-TF19
fixed-dimension composite functions, following the usual evolutionary
programming test suite.
"""

import numpy as np

from ..core import ObjectiveSpec


def sphere(x):
    return np.sum(x ** 2)


def schwefel_2_22(x):
    a = np.abs(x)
    return np.sum(a) + np.prod(a)


def schwefel_1_2(x):
    return np.sum(np.cumsum(x) ** 2)


def schwefel_2_21(x):
    return np.max(np.abs(x))


def rosenbrock(x):
    return np.sum(100.0 * (x[1:] - x[:-1] ** 2) ** 2 + (x[:-1] - 1.0) ** 2)


def step(x):
    return np.sum(np.floor(x + 0.5) ** 2)


def quartic(x):
    """Noise-free part of the noisy quartic; noise is added by ObjectiveSpec.evaluate when given a generator."""
    return np.sum(np.arange(1, x.size + 1) * x ** 4)


def _uniform_noise(x, rng):
    return rng.random()


def schwefel_2_26(x):
    return np.sum(-x * np.sin(np.sqrt(np.abs(x))))


def rastrigin(x, A=10.0):
    return A * x.size + np.sum(x ** 2 - A * np.cos(2.0 * np.pi * x))


def ackley(x):
    n = x.size
    return (-20.0 * np.exp(-0.2 * np.sqrt(np.sum(x ** 2) / n))
            - np.exp(np.sum(np.cos(2.0 * np.pi * x)) / n) + 20.0 + np.e)


def griewank(x):
    i = np.arange(1, x.size + 1)
    return np.sum(x ** 2) / 4000.0 - np.prod(np.cos(x / np.sqrt(i))) + 1.0


def _u(x, a, k, m):
    return np.where(x > a, k * (x - a) ** m, np.where(x < -a, k * (-x - a) ** m, 0.0))


def penalized_1(x):
    n = x.size
    y = 1.0 + (x + 1.0) / 4.0
    body = (10.0 * np.sin(np.pi * y[0]) ** 2
            + np.sum((y[:-1] - 1.0) ** 2 * (1.0 + 10.0 * np.sin(np.pi * y[1:]) ** 2))
            + (y[-1] - 1.0) ** 2)
    return np.pi / n * body + np.sum(_u(x, 10.0, 100.0, 4))


def penalized_2(x):
    body = (np.sin(3.0 * np.pi * x[0]) ** 2
            + np.sum((x[:-1] - 1.0) ** 2 * (1.0 + np.sin(3.0 * np.pi * x[1:]) ** 2))
            + (x[-1] - 1.0) ** 2 * (1.0 + np.sin(2.0 * np.pi * x[-1]) ** 2))
    return 0.1 * body + np.sum(_u(x, 5.0, 100.0, 4))


_FOXHOLE_GRID = np.array([-32.0, -16.0, 0.0, 16.0, 32.0])
FOXHOLES = np.vstack([np.tile(_FOXHOLE_GRID, 5), np.repeat(_FOXHOLE_GRID, 5)])


def shekel_foxholes(x):
    j = np.arange(1, 26)
    inner = j + np.sum((x[:, None] - FOXHOLES) ** 6, axis=0)
    return 1.0 / (1.0 / 500.0 + np.sum(1.0 / inner))


KOWALIK_A = np.array([0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627,
                      0.0456, 0.0342, 0.0323, 0.0235, 0.0246])
KOWALIK_B = 1.0 / np.array([0.25, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0])


def kowalik(x):
    b = KOWALIK_B
    model = x[0] * (b ** 2 + b * x[1]) / (b ** 2 + b * x[2] + x[3])
    return np.sum((KOWALIK_A - model) ** 2)


def six_hump_camel(x):
    x1, x2 = x
    return (4.0 * x1 ** 2 - 2.1 * x1 ** 4 + x1 ** 6 / 3.0 + x1 * x2
            - 4.0 * x2 ** 2 + 4.0 * x2 ** 4)


def branin(x):
    x1, x2 = x
    b = 5.1 / (4.0 * np.pi ** 2)
    c = 5.0 / np.pi
    t = 1.0 / (8.0 * np.pi)
    return (x2 - b * x1 ** 2 + c * x1 - 6.0) ** 2 + 10.0 * (1.0 - t) * np.cos(x1) + 10.0


def goldstein_price(x):
    x1, x2 = x
    a = 1.0 + (x1 + x2 + 1.0) ** 2 * (19.0 - 14.0 * x1 + 3.0 * x1 ** 2 - 14.0 * x2
                                      + 6.0 * x1 * x2 + 3.0 * x2 ** 2)
    b = 30.0 + (2.0 * x1 - 3.0 * x2) ** 2 * (18.0 - 32.0 * x1 + 12.0 * x1 ** 2 + 48.0 * x2
                                            - 36.0 * x1 * x2 + 27.0 * x2 ** 2)
    return a * b


HARTMANN3_A = np.array([[3.0, 10.0, 30.0], [0.1, 10.0, 35.0],
                        [3.0, 10.0, 30.0], [0.1, 10.0, 35.0]])
HARTMANN3_C = np.array([1.0, 1.2, 3.0, 3.2])
HARTMANN3_P = np.array([[0.3689, 0.1170, 0.2673], [0.4699, 0.4387, 0.7470],
                        [0.1091, 0.8732, 0.5547], [0.03815, 0.5743, 0.8828]])


def hartmann_3(x):
    return -np.sum(HARTMANN3_C * np.exp(-np.sum(HARTMANN3_A * (x - HARTMANN3_P) ** 2, axis=1)))


# Constants of the modified Schwefel landscape (optimum per coordinate).
SCHWEFEL_ARGMIN = 420.9687462275036
SCHWEFEL_MIN_PER_DIM = -418.9828872724338

# Minimisers refined numerically (BFGS from literature starting points).
FOXHOLES_ARGMIN = (-31.97833733176841, -31.97833860797579)
FOXHOLES_MIN = 0.9980038377944498
KOWALIK_ARGMIN = (0.19283345304274813, 0.19083624027597035,
                  0.12311729907598003, 0.13576599033984466)
KOWALIK_MIN = 3.074859878056051e-4
CAMEL_ARGMIN = (0.08984201652927098, -0.7126564013807202)
CAMEL_MIN = -1.0316284534898776
HARTMANN3_ARGMIN = (0.11461432786938144, 0.5556488498545934, 0.8525469529266695)
HARTMANN3_MIN = -3.8627821478207554


def _spec(name, fn, dim, lo, hi, opt_value=None, opt_point=None, noise=None, desc=""):
    return ObjectiveSpec(
        name=name, dimension=dim, lower_bounds=lo, upper_bounds=hi, function=fn,
        known_optimum=opt_value,
        optimizer=None if opt_point is None else np.broadcast_to(opt_point, (dim,)),
        noise=noise, description=desc,
    )


def classical_suite(dimension: int = 30) -> dict:
    """TF1-TF19 keyed by identifier; ``dimension`` applies to TF1-TF13."""
    n = dimension
    return {
        "TF1": _spec("TF1", sphere, n, -100, 100, 0.0, 0.0, desc="sphere"),
        "TF2": _spec("TF2", schwefel_2_22, n, -10, 10, 0.0, 0.0, desc="Schwefel 2.22"),
        "TF3": _spec("TF3", schwefel_1_2, n, -100, 100, 0.0, 0.0, desc="Schwefel 1.2"),
        "TF4": _spec("TF4", schwefel_2_21, n, -100, 100, 0.0, 0.0, desc="Schwefel 2.21"),
        "TF5": _spec("TF5", rosenbrock, n, -30, 30, 0.0, 1.0, desc="Rosenbrock"),
        "TF6": _spec("TF6", step, n, -100, 100, 0.0, 0.0, desc="step"),
        "TF7": _spec("TF7", quartic, n, -1.28, 1.28, 0.0, 0.0, noise=_uniform_noise,
                     desc="quartic with uniform noise"),
        "TF8": _spec("TF8", schwefel_2_26, n, -500, 500, SCHWEFEL_MIN_PER_DIM * n,
                     SCHWEFEL_ARGMIN, desc="Schwefel 2.26"),
        "TF9": _spec("TF9", rastrigin, n, -5.12, 5.12, 0.0, 0.0, desc="Rastrigin"),
        "TF10": _spec("TF10", ackley, n, -32, 32, 0.0, 0.0, desc="Ackley"),
        "TF11": _spec("TF11", griewank, n, -600, 600, 0.0, 0.0, desc="Griewank"),
        "TF12": _spec("TF12", penalized_1, n, -50, 50, 0.0, -1.0, desc="penalized 1"),
        "TF13": _spec("TF13", penalized_2, n, -50, 50, 0.0, 1.0, desc="penalized 2"),
        "TF14": _spec("TF14", shekel_foxholes, 2, -65.536, 65.536, FOXHOLES_MIN,
                      FOXHOLES_ARGMIN, desc="Shekel's foxholes"),
        "TF15": _spec("TF15", kowalik, 4, -5, 5, KOWALIK_MIN, KOWALIK_ARGMIN, desc="Kowalik"),
        "TF16": _spec("TF16", six_hump_camel, 2, -5, 5, CAMEL_MIN, CAMEL_ARGMIN,
                      desc="six-hump camel back"),
        "TF17": _spec("TF17", branin, 2, [-5.0, 0.0], [10.0, 15.0], 5.0 / (4.0 * np.pi),
                      (np.pi, 2.275), desc="Branin"),
        "TF18": _spec("TF18", goldstein_price, 2, -2, 2, 3.0, (0.0, -1.0),
                      desc="Goldstein-Price"),
        "TF19": _spec("TF19", hartmann_3, 3, 0, 1, HARTMANN3_MIN, HARTMANN3_ARGMIN,
                      desc="Hartmann 3-D"),
    }
