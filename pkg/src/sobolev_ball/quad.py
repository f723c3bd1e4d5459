"""Gauss-Jacobi rules on [-1, 1] and product rules on the unit disk."""
from dataclasses import dataclass

import numpy as np
from scipy.linalg import LinAlgError, eigh_tridiagonal

from .errors import NumericFailure
from .jacobi import check_params, jacobi_norm

__all__ = ["QuadratureRule", "DiskRule", "gauss_jacobi", "integrate", "disk_rule",
           "default_disk_rule"]


@dataclass(frozen=True)
class QuadratureRule:
    nodes: np.ndarray
    weights: np.ndarray
    alpha: float
    beta: float

    @property
    def size(self):
        return len(self.nodes)


@dataclass(frozen=True)
class DiskRule:
    """Product rule on the unit disk for Lebesgue measure dx1 dx2."""
    radial: QuadratureRule
    angular_count: int
    x1: np.ndarray
    x2: np.ndarray
    weights: np.ndarray

    @property
    def points(self):
        return np.stack([self.x1, self.x2], axis=-1)

    def integrate(self, values):
        values = np.asarray(values, dtype=float)
        if not np.all(np.isfinite(values)):
            raise NumericFailure("non-finite integrand value on the disk rule")
        return float(np.dot(self.weights, values))


def _recurrence(alpha, beta, n):
    """Diagonal and off-diagonal of the orthonormal Jacobi matrix."""
    k = np.arange(n, dtype=float)
    ab = alpha + beta
    s = 2 * k + ab
    with np.errstate(divide="ignore", invalid="ignore"):
        diag = (beta**2 - alpha**2) / (s * (s + 2))
    # k = 0 is 0/0 when alpha + beta = 0; use the exact mean of t
    diag[0] = (beta - alpha) / (ab + 2)
    k = k[1:]
    s = s[1:]
    # (k+ab)/(s-1) equals 1 at k = 1; written out to survive alpha + beta = -1
    ratio = np.ones_like(k)
    ratio[1:] = (k[1:] + ab) / (s[1:] - 1)
    off = np.sqrt(4 * k * (k + alpha) * (k + beta) * ratio / (s**2 * (s + 1)))
    return diag, off


def gauss_jacobi(alpha, beta, n):
    """n-point Gauss rule for the weight (1-t)^alpha (1+t)^beta (Golub-Welsch)."""
    check_params(alpha, beta)
    if n < 1:
        raise ValueError("rule size must be positive")
    diag, off = _recurrence(alpha, beta, n)
    try:
        nodes, vecs = eigh_tridiagonal(diag, off)
    except LinAlgError as exc:
        raise NumericFailure(f"tridiagonal eigensolver failed: {exc}") from exc
    weights = jacobi_norm(0, alpha, beta) * vecs[0] ** 2
    return QuadratureRule(nodes, weights, float(alpha), float(beta))


def integrate(rule, f):
    """Sum of weights * f(nodes); integrates f against the rule's weight."""
    values = np.asarray(f(rule.nodes), dtype=float)
    if values.shape == ():
        values = np.full(rule.size, float(values))
    if not np.all(np.isfinite(values)):
        raise NumericFailure("non-finite integrand value at a quadrature node")
    return float(np.dot(rule.weights, values))


def disk_rule(radial_n, angular_n):
    """Product rule on B^2: Gauss-Legendre in t = 2r^2 - 1, trapezoid in theta.

    Exact for polynomials of total degree <= min(2*radial_n - 1, angular_n - 1).
    """
    if radial_n < 1 or angular_n < 1:
        raise ValueError("rule sizes must be positive")
    radial = gauss_jacobi(0.0, 0.0, radial_n)
    r = np.sqrt((radial.nodes + 1) / 2)
    theta = 2 * np.pi * np.arange(angular_n) / angular_n
    # dx = r dr dtheta and r dr = dt / 4
    w = np.outer(radial.weights / 4, np.full(angular_n, 2 * np.pi / angular_n))
    x1 = np.outer(r, np.cos(theta))
    x2 = np.outer(r, np.sin(theta))
    return DiskRule(radial, angular_n, x1.ravel(), x2.ravel(), w.ravel())


def default_disk_rule(N, kappa=0, margin=0):
    """Rule sized for solver integrals at truncation degree N."""
    return disk_rule(N + kappa + 12 + margin, 4 * N + 16 + 2 * margin)
