"""Code-registered test problems."""
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .ballbasis import enumerate_indices, sobolev_bases

__all__ = ["ProblemRegistryEntry", "get_problem", "problem_ids", "UnknownProblem",
           "random_coefficients"]

MANUFACTURED_MAX_DEGREE = 4


class UnknownProblem(KeyError):
    pass


@dataclass
class ProblemRegistryEntry:
    id: str
    f: Callable
    exact_u: Optional[Callable] = None
    exact_grad_u: Optional[Callable] = None
    description: str = ""
    coefficients: Optional[dict] = None

    def __post_init__(self):
        if self.exact_u is not None and self.exact_grad_u is None:
            raise ValueError(f"problem {self.id}: exact_u given without its gradient")


def _exp2d(kappa, lam):
    def u(x1, x2):
        return np.exp(-x1 - x2) * (1 - x1**2 - x2**2)

    def grad(x1, x2):
        e = np.exp(-x1 - x2)
        s = 1 - x1**2 - x2**2
        return -e * s - 2 * x1 * e, -e * s - 2 * x2 * e

    def f(x1, x2):
        # -Lap u = e^{-x1-x2} (2 x1^2 + 2 x2^2 - 4 x1 - 4 x2 + 2)
        e = np.exp(-x1 - x2)
        s = 1 - x1**2 - x2**2
        return e * (2 * x1**2 + 2 * x2**2 - 4 * x1 - 4 * x2 + 2) + lam * s**kappa * u(x1, x2)

    return ProblemRegistryEntry(
        "exp2d", f, u, grad,
        "u = exp(-x1-x2)(1-x1^2-x2^2); reduces to the reference right-hand side at kappa=0, lam=8")


def _zero(kappa, lam):
    def zero(x1, x2):
        return np.zeros(np.broadcast(np.asarray(x1), np.asarray(x2)).shape)

    return ProblemRegistryEntry("zero", zero, zero, lambda x1, x2: (zero(x1, x2), zero(x1, x2)),
                                "f = 0, u = 0")


def _paraboloid(kappa, lam):
    def u(x1, x2):
        return 1 - x1**2 - x2**2

    def f(x1, x2):
        return 4 + lam * (1 - x1**2 - x2**2) ** (kappa + 1)

    return ProblemRegistryEntry("paraboloid", f, u, lambda x1, x2: (-2 * x1, -2 * x2),
                                "u = 1 - |x|^2")


def random_coefficients(seed, N=MANUFACTURED_MAX_DEGREE):
    rng = np.random.default_rng(seed)
    return {idx: float(rng.uniform(-1, 1)) for idx in enumerate_indices(N)}


def _manufactured(kappa, lam, seed):
    from .solver import manufactured_rhs

    coeffs = random_coefficients(seed)
    bases = sobolev_bases(MANUFACTURED_MAX_DEGREE, kappa, lam)
    f, u, grad = manufactured_rhs(coeffs, kappa, lam, bases)
    return ProblemRegistryEntry(
        f"manufactured:seed={seed}", f, u, grad,
        f"random Sobolev-basis coefficients on n <= {MANUFACTURED_MAX_DEGREE} (seed {seed})",
        coefficients=coeffs)


_REGISTRY = {"exp2d": _exp2d, "zero": _zero, "paraboloid": _paraboloid}


def problem_ids():
    return sorted(_REGISTRY) + ["manufactured:seed=<int>"]


def get_problem(problem_id, kappa, lam):
    if problem_id in _REGISTRY:
        return _REGISTRY[problem_id](kappa, lam)
    if problem_id.startswith("manufactured"):
        seed = 0
        _, _, rest = problem_id.partition(":")
        if rest:
            key, _, val = rest.partition("=")
            if key != "seed" or not val.lstrip("-").isdigit():
                raise UnknownProblem(problem_id)
            seed = int(val)
        return _manufactured(kappa, lam, seed)
    raise UnknownProblem(problem_id)
