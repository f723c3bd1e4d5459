"""Fully diagonalized spectral solver for

    -Lap u + lam (1 - |x|^2)^kappa u = f  on the unit disk,  u = 0 on the circle.

The trial functions (1-|x|^2) R_{j,nu}^n are mutually orthogonal for the
bilinear form of the problem, so each coefficient is one load integral
divided by a known norm:

    u_hat = int f (1-|x|^2) R dx / ||(1-|x|^2) R||^2.
"""
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .ballbasis import (BallIndex, ball_norm_H, b_mu, enumerate_indices,
                        eval_ball_classical, eval_trial, grad_trial,
                        graded_lex, laplacian_trial, R_monomials,
                        sobolev_ball_norm, sobolev_bases)
from .errors import NumericFailure
from .quad import default_disk_rule

__all__ = [
    "Problem",
    "SobolevExpansion",
    "ftilde_direct",
    "ftilde_all",
    "solve",
    "classical_fourier",
    "ftilde_recursive",
    "eval_partial_sum",
    "grad_partial_sum",
    "sobolev_error",
    "manufactured_rhs",
    "fd_gradient",
]


@dataclass
class Problem:
    kappa: int
    lam: float
    f: Callable
    exact_u: Optional[Callable] = None
    exact_grad: Optional[Callable] = None


@dataclass
class SobolevExpansion:
    N: int
    kappa: int
    lam: float
    coeffs: dict
    norms: dict
    bases: dict = field(repr=False)
    ftilde: dict = field(default_factory=dict, repr=False)

    def __call__(self, x1, x2):
        return eval_partial_sum(self, x1, x2)

    def monomial_coeffs(self):
        """Coefficients of u_N / (1 - |x|^2) in graded-lex monomial order."""
        total = np.zeros(((self.N + 1) * (self.N + 2)) // 2)
        for idx, c in self.coeffs.items():
            total += c * graded_lex(R_monomials(self.bases[idx.m], idx), self.N)
        return total


def _values(f, x1, x2):
    v = np.asarray(f(x1, x2), dtype=float)
    if v.shape == ():
        v = np.full(np.shape(x1), float(v))
    if not np.all(np.isfinite(v)):
        raise NumericFailure("right-hand side is not finite at a quadrature node")
    return v


def ftilde_direct(f, idx, basis, rule):
    """int f (1-|x|^2) R_{j,nu}^n dx by disk quadrature."""
    fv = _values(f, rule.x1, rule.x2)
    return rule.integrate(fv * eval_trial(basis, idx, rule.x1, rule.x2))


def ftilde_all(f, bases, N, rule):
    fv = _values(f, rule.x1, rule.x2)
    return {idx: rule.integrate(fv * eval_trial(bases[idx.m], idx, rule.x1, rule.x2))
            for idx in enumerate_indices(N)}


def solve(problem, N, rule=None, margin=0, bases=None):
    """Fourier-Sobolev coefficients of the solution up to total degree N."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    if rule is None:
        rule = default_disk_rule(N, problem.kappa, margin)
    if bases is None:
        bases = sobolev_bases(N, problem.kappa, problem.lam)
    ft = ftilde_all(problem.f, bases, N, rule)
    norms = {idx: sobolev_ball_norm(idx, bases[idx.m]) for idx in ft}
    coeffs = {idx: ft[idx] / norms[idx] for idx in ft}
    return SobolevExpansion(N, problem.kappa, problem.lam, coeffs, norms, bases, ft)


def classical_fourier(f, idx, rule, mu=1.0):
    """<f, P_{j,nu}^{n,mu}>_mu / H_{j,n}^mu."""
    fv = _values(f, rule.x1, rule.x2)
    s = rule.x1**2 + rule.x2**2
    ip = b_mu(mu) * rule.integrate(
        fv * eval_ball_classical(mu, idx, rule.x1, rule.x2) * (1 - s) ** mu)
    return ip / ball_norm_H(mu, idx.n, idx.j)


def ftilde_recursive(classical, bases, kappa):
    """Load integrals from classical (mu = 1) coefficients via the connection formula.

    Along each chain of fixed harmonic (m, nu), with n = m + 2k,

        ftilde_k = fhat_k H_k / b_1 - sum_{j=k-kappa-1}^{k-1} a_{k,j} ftilde_j.
    """
    out = {}
    b1 = b_mu(1.0)
    for idx in sorted(classical, key=lambda i: (i.m, i.nu, i.j)):
        basis = bases[idx.m]
        k = idx.j
        val = classical[idx] * ball_norm_H(1.0, idx.n, k) / b1
        for j in range(max(0, k - kappa - 1), k):
            prev = BallIndex(idx.n - 2 * (k - j), j, idx.nu)
            if prev not in out:
                raise IndexError(f"missing chain predecessor {prev} for {idx}")
            val -= basis.a[k, j] * out[prev]
        out[idx] = val
    return out


def eval_partial_sum(e, x1, x2):
    """u_N(x) = sum u_hat (1-|x|^2) R(x)."""
    x1 = np.asarray(x1, dtype=float)
    x2 = np.asarray(x2, dtype=float)
    total = np.zeros(np.broadcast(x1, x2).shape)
    for idx, c in e.coeffs.items():
        total += c * eval_trial(e.bases[idx.m], idx, x1, x2)
    return total


def grad_partial_sum(e, x1, x2):
    x1 = np.asarray(x1, dtype=float)
    x2 = np.asarray(x2, dtype=float)
    g1 = np.zeros(np.broadcast(x1, x2).shape)
    g2 = np.zeros_like(g1)
    for idx, c in e.coeffs.items():
        d1, d2 = grad_trial(e.bases[idx.m], idx, x1, x2)
        g1 += c * d1
        g2 += c * d2
    return g1, g2


def fd_gradient(u, h=1e-4):
    """Sixth-order central-difference gradient of u(x1, x2)."""
    w = np.array([-1, 9, -45, 0, 45, -9, 1]) / 60.0
    offs = np.arange(-3, 4) * h

    def grad(x1, x2):
        g1 = sum(wi * u(x1 + o, x2) for wi, o in zip(w, offs) if wi) / h
        g2 = sum(wi * u(x1, x2 + o) for wi, o in zip(w, offs) if wi) / h
        return g1, g2
    return grad


def sobolev_error(e, exact_u, rule, exact_grad=None):
    """lam int (u - u_N)^2 (1-|x|^2)^kappa + int |grad(u - u_N)|^2, by quadrature."""
    if exact_grad is None:
        exact_grad = fd_gradient(exact_u)
    x1, x2 = rule.x1, rule.x2
    diff = _values(exact_u, x1, x2) - eval_partial_sum(e, x1, x2)
    gu1, gu2 = exact_grad(x1, x2)
    gn1, gn2 = grad_partial_sum(e, x1, x2)
    weight = (1 - x1**2 - x2**2) ** e.kappa
    integrand = e.lam * weight * diff**2 + (gu1 - gn1) ** 2 + (gu2 - gn2) ** 2
    return rule.integrate(integrand)


def manufactured_rhs(coeffs, kappa, lam, bases):
    """f = -Lap u + lam (1-|x|^2)^kappa u for u = sum c (1-|x|^2) R.

    `bases` must contain a SobolevBasis for every harmonic degree in `coeffs`.
    Returns (f, u, grad_u).
    """
    items = [(idx, c) for idx, c in coeffs.items() if c != 0]

    def u(x1, x2):
        x1 = np.asarray(x1, dtype=float)
        out = np.zeros(np.broadcast(x1, np.asarray(x2)).shape)
        for idx, c in items:
            out += c * eval_trial(bases[idx.m], idx, x1, x2)
        return out

    def grad_u(x1, x2):
        x1 = np.asarray(x1, dtype=float)
        g1 = np.zeros(np.broadcast(x1, np.asarray(x2)).shape)
        g2 = np.zeros_like(g1)
        for idx, c in items:
            d1, d2 = grad_trial(bases[idx.m], idx, x1, x2)
            g1 += c * d1
            g2 += c * d2
        return g1, g2

    def f(x1, x2):
        x1 = np.asarray(x1, dtype=float)
        x2 = np.asarray(x2, dtype=float)
        lap = np.zeros(np.broadcast(x1, x2).shape)
        for idx, c in items:
            lap += c * laplacian_trial(bases[idx.m], idx, x1, x2)
        return -lap + lam * (1 - x1**2 - x2**2) ** kappa * u(x1, x2)

    return f, u, grad_u
