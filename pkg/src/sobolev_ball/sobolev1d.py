"""Univariate Sobolev orthogonal polynomials q_k^(beta).

The inner product is

    (f, g)_beta = lam / 2^(kappa+3) * int f g (1-t)^(kappa+2) (1+t)^beta dt
                  + int [(1-t) f]' [(1-t) g]' (1+t)^(beta+1) dt

on [-1, 1]. Each q_k carries the leading coefficient of P_k^(1,beta) and is
stored through its expansion in the family {P_j^(1,beta)}. The connection

    P_k^(1,beta) = sum_{j=k-kappa-1}^{k} a_{k,j} q_j

has bandwidth kappa + 2, and `build_basis` computes the a_{k,j} and the
norms hhat_k with banded recurrences only. `gram_schmidt_oracle` does the
same job by brute force and exists for verification.
"""
from dataclasses import dataclass, field

import mpmath
import numpy as np

from .errors import ConsistencyError, NumericFailure, ParameterDomainError
from .jacobi import eval_jacobi_all, jacobi_norm, jacobi_power_coeffs
from .quad import gauss_jacobi

__all__ = [
    "SobolevParams",
    "JacobiExpansion",
    "GammaTable",
    "SobolevBasis",
    "sobolev_inner",
    "abc_coeffs",
    "gamma_table",
    "gamma_coeffs",
    "build_basis",
    "gram_schmidt_oracle",
    "eval_q",
    "d_closed",
    "d_recurrence",
    "r_polys",
]


@dataclass(frozen=True)
class SobolevParams:
    beta: float
    kappa: int = 0
    lam: float = 1.0

    def __post_init__(self):
        if not self.beta > -1:
            raise ParameterDomainError(f"beta must exceed -1 (got {self.beta})")
        if int(self.kappa) != self.kappa or self.kappa < 0:
            raise ParameterDomainError(f"kappa must be a nonnegative integer (got {self.kappa})")
        if not self.lam > 0:
            raise ParameterDomainError(f"lambda must be positive (got {self.lam})")
        object.__setattr__(self, "kappa", int(self.kappa))

    @property
    def mass_scale(self):
        """The factor lam / 2^(kappa+3) in front of the L2 term."""
        return self.lam / 2.0 ** (self.kappa + 3)


@dataclass(frozen=True)
class JacobiExpansion:
    """Polynomial sum_j coeffs[j] P_j^(1,beta)(t)."""
    beta: float
    coeffs: np.ndarray

    @property
    def degree(self):
        nz = np.flatnonzero(self.coeffs)
        return int(nz[-1]) if len(nz) else 0

    def __call__(self, t):
        return self.deriv(t, 0)

    def deriv(self, t, order=1):
        """order-th derivative, via d/dt P_n^(a,b) = (n+a+b+1)/2 P_{n-1}^(a+1,b+1)."""
        t = np.asarray(t, dtype=float)
        c = np.asarray(self.coeffs, dtype=float)
        n = len(c) - 1
        if order > n:
            return np.zeros_like(t)
        vals = eval_jacobi_all(n - order, 1 + order, self.beta + order, t)
        k = np.arange(order, n + 1)
        fac = np.ones(len(k))
        for i in range(order):
            fac *= 0.5 * (k - i + 2 + self.beta + 2 * i)
        return np.tensordot(c[order:] * fac, vals, axes=1)

    def power_coeffs(self):
        """Monomial coefficients in t, ascending."""
        n = len(self.coeffs) - 1
        return np.asarray(self.coeffs) @ jacobi_power_coeffs(n, 1.0, self.beta)


def _unit(k, size):
    e = np.zeros(size)
    e[k] = 1.0
    return e


def sobolev_inner(params, p, q):
    """(p, q)_beta for two JacobiExpansion objects, by Gauss-Jacobi quadrature."""
    for e in (p, q):
        if e.beta != params.beta:
            raise ConsistencyError("expansion beta differs from params.beta")
    npts = max(p.degree, q.degree) + 2
    r0 = gauss_jacobi(params.kappa + 2, params.beta, npts)
    r1 = gauss_jacobi(0.0, params.beta + 1, npts)
    t = r0.nodes
    mass = np.dot(r0.weights, p(t) * q(t))
    t = r1.nodes
    dp = (1 - t) * p.deriv(t) - p(t)
    dq = (1 - t) * q.deriv(t) - q(t)
    return params.mass_scale * mass + np.dot(r1.weights, dp * dq)


def abc_coeffs(beta, k):
    """(a_k, b_k, c_k) with (1-t) P_k = a_k P_{k+1} + b_k P_k + c_k P_{k-1}, family (1, beta)."""
    s = 2 * k + beta
    a = -2 * (k + 1) * (k + beta + 2) / ((s + 2) * (s + 3))
    b = 4 * (k + 1) * (k + beta + 1) / ((s + 1) * (s + 3))
    # c_0 multiplies P_{-1} = 0; report it as 0 rather than the formula's value
    c = -2 * (k + 1) * (k + beta) / ((s + 1) * (s + 2)) if k else 0.0
    return a, b, c


@dataclass(frozen=True)
class GammaTable:
    """Coefficients of (1-t)^(level+1) P_k^(1,beta) in the family {P_j^(1,beta)}.

    Level 0 holds the three-term coefficients. `values[j]` is gamma_{k,j}
    for 0 <= j <= k + level + 1.
    """
    k: int
    level: int
    beta: float
    values: np.ndarray

    def __getitem__(self, j):
        if 0 <= j < len(self.values):
            return self.values[j]
        return 0.0

    @property
    def band(self):
        return max(0, self.k - self.level - 1), self.k + self.level + 1

    def __call__(self, t):
        return JacobiExpansion(self.beta, self.values)(t)


def gamma_table(beta, k, level):
    """Iterate the (1-t) multiplication level times starting from (a_k, b_k, c_k)."""
    size = k + level + 2
    abc = np.array([abc_coeffs(beta, j) for j in range(size + 1)])
    g = np.zeros(size)
    a, b, c = abc[k]
    g[k + 1] = a
    g[k] = b
    if k >= 1:
        g[k - 1] = c
    for _ in range(level):
        new = np.zeros(size)
        for j in range(size):
            v = abc[j, 1] * g[j]
            if j + 1 < size:
                v += abc[j + 1, 2] * g[j + 1]
            if j >= 1:
                v += abc[j - 1, 0] * g[j - 1]
            new[j] = v
        g = new
    return GammaTable(k, level, float(beta), g)


def gamma_coeffs(beta, kappa, k):
    """Table for (1-t)^(kappa+1) P_k^(1,beta), band k-kappa-1 .. k+kappa+1."""
    return gamma_table(beta, k, kappa)


@dataclass
class SobolevBasis:
    """q_0..q_K for one (beta, kappa, lam).

    a[k, j]    connection coefficients, a[k, k] = 1
    hhat[k]    (q_k, q_k)_beta
    q_in_P[k]  coefficients of q_k in {P_j^(1,beta)}
    c[i, j]    lam/2^(kappa+3) int q_i P_j (1-t)(1+t)^beta dt, lower triangular
    """
    params: SobolevParams
    K: int
    a: np.ndarray
    hhat: np.ndarray
    q_in_P: np.ndarray
    c: np.ndarray = field(default=None, repr=False)

    @property
    def beta(self):
        return self.params.beta

    def q(self, k):
        if not 0 <= k <= self.K:
            raise IndexError(f"degree {k} outside basis range 0..{self.K}")
        return JacobiExpansion(self.beta, self.q_in_P[k, :k + 1])

    def eval_q(self, k, t, order=0):
        return self.q(k).deriv(t, order)

    def to_dict(self):
        p = self.params
        return {
            "params": {"beta": p.beta, "kappa": p.kappa, "lambda": p.lam},
            "K": self.K,
            "a": self.a.tolist(),
            "hhat": self.hhat.tolist(),
            "q_in_P": self.q_in_P.tolist(),
        }


def eval_q(basis, k, t):
    """q_k^(beta)(t) from the stored P^(1,beta) expansion."""
    return basis.eval_q(k, t)


def build_basis(params, K):
    """Connection coefficients and norms by the banded recursion."""
    if K < 0:
        raise ValueError("K must be nonnegative")
    beta, kappa = params.beta, params.kappa
    scale = params.mass_scale
    size = K + 1
    a = np.zeros((size, size))
    c = np.zeros((size, size))
    qP = np.zeros((size, size))
    hhat = np.zeros(size)
    for k in range(size):
        gam = gamma_coeffs(beta, kappa, k)
        lo = max(0, k - kappa - 1)
        a[k, k] = 1.0
        # numerators A_k = C_k Gamma_k over the band
        for i in range(lo, k):
            num = sum(gam[j] * c[i, j] for j in range(lo, i + 1))
            a[k, i] = num / hhat[i]
        qP[k, k] = 1.0
        for i in range(lo, k):
            qP[k] -= a[k, i] * qP[i]
        # row k of C: diagonal in closed form, the rest from the connection
        c[k, k] = scale * jacobi_norm(k, 1.0, beta)
        for j in range(lo, k):
            c[k, j] = -sum(a[k, h] * c[h, j] for h in range(lo, k))
        hk = sum(gam[j] * c[k, j] for j in range(lo, k + 1))
        hk += (k + 1) ** 2 * jacobi_norm(k, 0.0, beta + 1)
        if not hk > 0:
            raise ConsistencyError(f"nonpositive Sobolev norm at k={k}: {hk}")
        hhat[k] = hk
    return SobolevBasis(params, K, a, hhat, qP, c)


def _mp_jacobi_in_x(n, beta):
    """Coefficients of P_n^(1,beta) in powers of x = (1-t)/2, as mpf."""
    out = [mpmath.mpf(0)] * (n + 1)
    lead = mpmath.rf(2, n) / mpmath.factorial(n)
    for k in range(n + 1):
        out[k] = (lead * mpmath.rf(-n, k) * mpmath.rf(n + beta + 2, k)
                  / (mpmath.rf(2, k) * mpmath.factorial(k)))
    return out


def _mp_moments(params, size):
    """Scaled Beta moments for the mass and derivative terms of (.,.)_beta in x = (1-t)/2.

    With t = 1 - 2x the mass term becomes 2^(kappa+beta+3) int_0^1 p q x^(kappa+2) (1-x)^beta
    and the derivative term 2^(beta+2) int_0^1 (x p)' (x q)' (1-x)^(beta+1).
    """
    beta, kappa = mpmath.mpf(params.beta), params.kappa
    mass_scale = mpmath.mpf(params.lam) / 2 ** (kappa + 3) * 2 ** (kappa + beta + 3)
    grad_scale = 2 ** (beta + 2)
    return ([mass_scale * mpmath.beta(n + kappa + 3, beta + 1) for n in range(size)],
            [grad_scale * mpmath.beta(n + 1, beta + 2) for n in range(size)])


def _mp_inner(p, q, moments):
    """(p, q)_beta for mpf coefficient lists in x = (1-t)/2."""
    mass_m, grad_m = moments
    mass = grad = mpmath.mpf(0)
    for i, pi in enumerate(p):
        if not pi:
            continue
        for j, qj in enumerate(q):
            mass += pi * qj * mass_m[i + j]
            # (x p)' = sum (i+1) p_i x^i
            grad += (i + 1) * (j + 1) * pi * qj * grad_m[i + j]
    return mass + grad


def gram_schmidt_oracle(params, K, dps=40):
    """Gram-Schmidt of {P_k^(1,beta)} under (.,.)_beta, carried out in mpmath.

    Independent of `build_basis`: polynomials live in monomials of (1-t)/2 and
    every inner product is a sum of exact Beta-function moments, so the
    double-precision result is correctly rounded up to cancellation at `dps`
    digits. Dense and O(K^4); meant for K up to a few dozen.
    """
    size = K + 1
    a = np.zeros((size, size))
    qP = np.zeros((size, size))
    hhat = np.zeros(size)
    with mpmath.workdps(dps):
        beta = mpmath.mpf(params.beta)
        moments = _mp_moments(params, 2 * size)
        P = [_mp_jacobi_in_x(k, beta) for k in range(size)]
        qs, q_coef, norms = [], [], []
        for k in range(size):
            v = list(P[k]) + [mpmath.mpf(0)] * (size - k - 1)
            cP = [mpmath.mpf(0)] * size
            cP[k] = mpmath.mpf(1)
            for j in range(k):
                coef = _mp_inner(P[k], qs[j], moments) / norms[j]
                a[k, j] = float(coef)
                v = [vi - coef * wj for vi, wj in zip(v, qs[j])]
                cP = [ci - coef * wj for ci, wj in zip(cP, q_coef[j])]
            a[k, k] = 1.0
            hk = _mp_inner(v, v, moments)
            if not hk > 0:
                raise NumericFailure(f"Gram-Schmidt lost positivity at k={k}")
            qs.append(v)
            q_coef.append(cP)
            norms.append(hk)
            hhat[k] = float(hk)
            qP[k] = [float(c) for c in cP]
    # c table by direct quadrature, for cross-checks
    rule = gauss_jacobi(1.0, params.beta, size + 1)
    Pv = eval_jacobi_all(K, 1.0, params.beta, rule.nodes)
    Q = qP @ Pv
    c = np.tril(params.mass_scale * (Q * rule.weights) @ Pv.T)
    return SobolevBasis(params, K, a, hhat, qP, c)


# kappa = 0 closed forms

def d_closed(params, k, hhat_prev):
    """d_k = a_{k,k-1} for kappa = 0 from h_k^(1,beta) and hhat_{k-1}."""
    if params.kappa != 0:
        raise ParameterDomainError("closed form for d_k needs kappa = 0")
    if k == 0:
        return 0.0
    beta, lam = params.beta, params.lam
    s = 2 * k + beta
    return (-lam * k * (k + beta + 1) / (4 * s * (s + 1))
            * jacobi_norm(k, 1.0, beta) / hhat_prev)


def _pp_offdiag(beta, lam, k):
    """(P_k, P_{k-1})_beta for kappa = 0."""
    s = 2 * k + beta
    return -lam / 8 * k * (k + 1) * 2.0 ** (beta + 3) / (s * (s + 1) * (s + 2))


def _pp_diag(beta, lam, k):
    """(P_{k-1}, P_{k-1})_beta for kappa = 0."""
    s = 2 * k + beta
    return (lam / 8 * 2 * k**2 * 2.0 ** (beta + 3) / ((s - 1) * s * (s + 1))
            + k**2 * 2.0 ** (beta + 3) / (2 * s))


def d_recurrence(beta, lam, K):
    """d_1..d_K for kappa = 0 from the nonlinear two-term recursion."""
    if K < 1:
        raise ValueError("K must be at least 1")
    d = np.zeros(K + 1)
    for k in range(1, K + 1):
        den = _pp_diag(beta, lam, k)
        if k >= 2:
            den -= d[k - 1] * _pp_offdiag(beta, lam, k - 1)
        if den == 0:
            raise NumericFailure(f"zero denominator in d recursion at k={k}")
        d[k] = _pp_offdiag(beta, lam, k) / den
    return d[1:]


def _t(k, beta):
    return 0.0 if k == 0 else k / (2 * k + beta)


def r_polys(beta, s, K):
    """r_0..r_{K+1} at s, with d_k = r_k(4/lam) / r_{k+1}(4/lam) for k >= 1.

    r_0 = r_1 = 1; the k = 0 step degenerates (t_0 = 0) so r_1 only fixes
    the overall scale. For k >= 1

        t_{k+1}/(2k+beta+1) r_{k+1}
            = -(1/(2k+beta-1) + 1/(2k+beta+1) + (2k+beta) s) t_k r_k
              - t_{k-1}/(2k+beta-1) r_{k-1}.
    """
    s = np.asarray(s, dtype=float)
    r = np.empty((K + 2,) + s.shape)
    r[0] = 1.0
    if K + 2 > 1:
        r[1] = 1.0
    for k in range(1, K + 1):
        m = 2 * k + beta
        lead = _t(k + 1, beta) / (m + 1)
        mid = -(1 / (m - 1) + 1 / (m + 1) + m * s) * _t(k, beta)
        low = -_t(k - 1, beta) / (m - 1)
        r[k + 1] = (mid * r[k] + low * r[k - 1]) / lead
    return r
