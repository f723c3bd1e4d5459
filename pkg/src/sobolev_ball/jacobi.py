"""Classical Jacobi polynomials P_n^(alpha, beta) on [-1, 1].

Values come from the forward three-term recurrence. Norms and leading
coefficients use log-Gamma so that moderately large degrees do not overflow.
"""
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .errors import ParameterDomainError

__all__ = [
    "JacobiParam",
    "pochhammer",
    "eval_jacobi",
    "eval_jacobi_all",
    "eval_jacobi_deriv",
    "jacobi_norm",
    "leading_coeff",
    "contiguous_coeffs",
    "jacobi_power_coeffs",
]


@dataclass(frozen=True)
class JacobiParam:
    alpha: float
    beta: float

    def __post_init__(self):
        check_params(self.alpha, self.beta)


def check_params(alpha, beta):
    if not (alpha > -1 and beta > -1):
        raise ParameterDomainError(
            f"Jacobi parameters must exceed -1 (got alpha={alpha}, beta={beta})")


def pochhammer(a, n):
    """Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1."""
    if n < 0:
        raise ValueError("Pochhammer length must be nonnegative")
    out = 1.0
    for i in range(n):
        out *= a + i
    return out


def eval_jacobi_all(n, alpha, beta, t):
    """Values of P_0, ..., P_n at t, stacked along a new leading axis.

    Returns an array of shape (n + 1,) + shape(t).
    """
    check_params(alpha, beta)
    if n < 0:
        raise ValueError("degree must be nonnegative")
    t = np.asarray(t, dtype=float)
    out = np.empty((n + 1,) + t.shape)
    out[0] = 1.0
    if n == 0:
        return out
    ab = alpha + beta
    # explicit linear form avoids the 0/0 in the recurrence when alpha+beta ~ -1
    out[1] = 0.5 * ((ab + 2) * t + alpha - beta)
    for k in range(1, n):
        s = 2 * k + ab
        lhs = 2 * (k + 1) * (k + ab + 1) * s
        c1 = (s + 1) * ((s + 2) * s * t + alpha**2 - beta**2)
        c0 = 2 * (k + alpha) * (k + beta) * (s + 2)
        out[k + 1] = (c1 * out[k] - c0 * out[k - 1]) / lhs
    return out


def eval_jacobi(n, alpha, beta, t):
    """P_n^(alpha, beta)(t) by forward recurrence. t may be an array."""
    return eval_jacobi_all(n, alpha, beta, t)[n]


def eval_jacobi_deriv(n, alpha, beta, t):
    """d/dt P_n^(alpha, beta)(t) = (n+alpha+beta+1)/2 P_{n-1}^(alpha+1, beta+1)(t)."""
    check_params(alpha, beta)
    t = np.asarray(t, dtype=float)
    if n == 0:
        return np.zeros_like(t)
    return 0.5 * (n + alpha + beta + 1) * eval_jacobi(n - 1, alpha + 1, beta + 1, t)


def jacobi_norm(n, alpha, beta):
    """Squared L2 norm h_n of P_n^(alpha, beta) against (1-t)^alpha (1+t)^beta."""
    check_params(alpha, beta)
    ab = alpha + beta
    if n == 0:
        # the general formula has Gamma(ab+1)/(ab+1), singular at ab = -1
        logh = ((ab + 1) * np.log(2.0) + gammaln(alpha + 1) + gammaln(beta + 1)
                - gammaln(ab + 2))
    else:
        logh = ((ab + 1) * np.log(2.0) - np.log(2 * n + ab + 1)
                + gammaln(n + alpha + 1) + gammaln(n + beta + 1)
                - gammaln(n + 1) - gammaln(n + ab + 1))
    return float(np.exp(logh))


def leading_coeff(n, alpha, beta):
    """Leading monomial coefficient k_n = 2^-n binom(2n+alpha+beta, n)."""
    check_params(alpha, beta)
    if n == 0:
        return 1.0
    m = 2 * n + alpha + beta
    return float(np.exp(gammaln(m + 1) - gammaln(n + 1) - gammaln(m - n + 1)
                        - n * np.log(2.0)))


def contiguous_coeffs(n, alpha, beta):
    """Coefficients (a_n, b_n) of the contiguous relations between families.

    a_n = (n+alpha+beta+1)/(2n+alpha+beta+1), b_n = (n+beta)/(2n+alpha+beta+1).
    """
    den = 2 * n + alpha + beta + 1
    if den == 0:
        raise ParameterDomainError("2n + alpha + beta + 1 vanishes")
    return (n + alpha + beta + 1) / den, (n + beta) / den


def jacobi_power_coeffs(n, alpha, beta):
    """Monomial coefficients (ascending powers) of P_0..P_n as an (n+1, n+1) array.

    Row k holds P_k. Built with the same recurrence as the evaluator, acting on
    coefficient vectors instead of values.
    """
    check_params(alpha, beta)
    c = np.zeros((n + 1, n + 1))
    c[0, 0] = 1.0
    if n == 0:
        return c
    ab = alpha + beta
    c[1, 0] = 0.5 * (alpha - beta)
    c[1, 1] = 0.5 * (ab + 2)
    for k in range(1, n):
        s = 2 * k + ab
        lhs = 2 * (k + 1) * (k + ab + 1) * s
        shifted = np.roll(c[k], 1)
        shifted[0] = 0.0
        c[k + 1] = ((s + 1) * ((s + 2) * s * shifted + (alpha**2 - beta**2) * c[k])
                    - 2 * (k + alpha) * (k + beta) * (s + 2) * c[k - 1]) / lhs
    return c
