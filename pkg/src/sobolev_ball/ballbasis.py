"""Classical and Sobolev orthogonal polynomial bases on the unit disk.

Indices (n, j, nu) follow the ball convention: total degree n, radial
degree j, harmonic degree m = n - 2j, and nu = 1 (cosine) or 2 (sine).
Harmonics are normalized so that (1/omega_2) int_0^{2pi} Y^2 dtheta = 1.

Bivariate polynomials in monomial form are 2-D arrays ``P[a, b]`` holding
the coefficient of x1^a x2^b.
"""
from dataclasses import dataclass
from math import comb, gamma, pi

import numpy as np

from .errors import ConsistencyError
from .jacobi import eval_jacobi, pochhammer
from .sobolev1d import SobolevParams, build_basis

__all__ = [
    "BallIndex",
    "Harmonic2D",
    "enumerate_indices",
    "omega",
    "b_mu",
    "eval_harmonic",
    "grad_harmonic",
    "eval_ball_classical",
    "ball_norm_H",
    "sobolev_bases",
    "eval_R",
    "eval_trial",
    "grad_trial",
    "laplacian_trial",
    "sobolev_ball_norm",
    "harmonic_monomials",
    "R_monomials",
    "trial_monomials",
    "graded_lex",
    "monomial_labels",
]

D = 2


@dataclass(frozen=True, order=True)
class BallIndex:
    n: int
    j: int
    nu: int = 1

    def __post_init__(self):
        if self.n < 0 or not 0 <= 2 * self.j <= self.n:
            raise IndexError(f"invalid ball index n={self.n}, j={self.j}")
        if self.nu not in (1, 2) or (self.m == 0 and self.nu != 1):
            raise IndexError(f"invalid harmonic index nu={self.nu} for m={self.m}")

    @property
    def m(self):
        return self.n - 2 * self.j

    @property
    def beta(self):
        return self.m + (D - 2) / 2

    def __str__(self):
        return f"({self.n},{self.j},{self.nu})"


def enumerate_indices(N):
    """All indices with n <= N; there are (N+1)(N+2)/2 of them."""
    out = []
    for n in range(N + 1):
        for j in range(n // 2 + 1):
            for nu in ((1,) if n == 2 * j else (1, 2)):
                out.append(BallIndex(n, j, nu))
    return out


@dataclass(frozen=True)
class Harmonic2D:
    m: int
    kind: str = "cos"

    def __post_init__(self):
        if self.kind not in ("cos", "sin"):
            raise ValueError("kind must be 'cos' or 'sin'")
        if self.m == 0 and self.kind == "sin":
            raise ValueError("no sine harmonic of degree 0")

    @property
    def normalization(self):
        return 1.0 if self.m == 0 else np.sqrt(2.0)

    @property
    def nu(self):
        return 1 if self.kind == "cos" else 2


def omega(d=D):
    """Surface area of S^{d-1}."""
    return 2 * pi ** (d / 2) / gamma(d / 2)


def b_mu(mu, d=D):
    """Normalization constant of (1 - |x|^2)^mu on B^d."""
    return gamma(mu + d / 2 + 1) / (pi ** (d / 2) * gamma(mu + 1))


def _zpow(m, x1, x2):
    return (np.asarray(x1, dtype=float) + 1j * np.asarray(x2, dtype=float)) ** m


def eval_harmonic(m, nu, x1, x2):
    """Normalized solid harmonic r^m cos(m theta) (nu=1) or r^m sin(m theta) (nu=2)."""
    z = _zpow(m, x1, x2)
    c = 1.0 if m == 0 else np.sqrt(2.0)
    return c * (z.real if nu == 1 else z.imag)


def grad_harmonic(m, nu, x1, x2):
    """(dY/dx1, dY/dx2) of the normalized solid harmonic."""
    if m == 0:
        zero = np.zeros(np.broadcast(np.asarray(x1), np.asarray(x2)).shape)
        return zero, zero.copy()
    z = m * np.sqrt(2.0) * _zpow(m - 1, x1, x2)
    # d/dx1 z^m = m z^{m-1}, d/dx2 z^m = i m z^{m-1}
    if nu == 1:
        return z.real, -z.imag
    return z.imag, z.real


def eval_ball_classical(mu, idx, x1, x2):
    """P_{j,nu}^{n,mu}(x) = P_j^(mu, beta)(2|x|^2 - 1) Y_nu^{m}(x)."""
    s = np.asarray(x1) ** 2 + np.asarray(x2) ** 2
    return (eval_jacobi(idx.j, mu, idx.beta, 2 * s - 1)
            * eval_harmonic(idx.m, idx.nu, x1, x2))


def ball_norm_H(mu, n, j, d=D):
    """H_{j,n}^mu = <P_{j,nu}^{n,mu}, P_{j,nu}^{n,mu}>_mu."""
    num = pochhammer(mu + 1, j) * pochhammer(d / 2, n - j) * (n - j + mu + d / 2)
    den = pochhammer(1, j) * pochhammer(mu + (d + 2) / 2, n - j) * (n + mu + d / 2)
    return num / den


def sobolev_bases(N, kappa, lam):
    """One SobolevBasis per harmonic degree m = 0..N, each up to degree (N-m)//2."""
    return {m: build_basis(SobolevParams(float(m), kappa, lam), (N - m) // 2)
            for m in range(N + 1)}


def _check(basis, idx):
    if basis.beta != idx.beta:
        raise ConsistencyError(
            f"basis built for beta={basis.beta}, index {idx} needs beta={idx.beta}")


def eval_R(basis, idx, x1, x2):
    """R_{j,nu}^n(x) = q_j^(beta)(2|x|^2 - 1) Y_nu^{n-2j}(x)."""
    _check(basis, idx)
    s = np.asarray(x1) ** 2 + np.asarray(x2) ** 2
    return basis.eval_q(idx.j, 2 * s - 1) * eval_harmonic(idx.m, idx.nu, x1, x2)


def _radial(basis, j, s):
    """g(s) = (1-s) q_j(2s-1) and its first two s-derivatives."""
    t = 2 * s - 1
    q0 = basis.eval_q(j, t)
    q1 = basis.eval_q(j, t, 1)
    q2 = basis.eval_q(j, t, 2)
    g = (1 - s) * q0
    g1 = -q0 + 2 * (1 - s) * q1
    g2 = -4 * q1 + 4 * (1 - s) * q2
    return g, g1, g2


def eval_trial(basis, idx, x1, x2):
    """(1 - |x|^2) R_{j,nu}^n(x), which vanishes on the unit circle."""
    s = np.asarray(x1) ** 2 + np.asarray(x2) ** 2
    return (1 - s) * eval_R(basis, idx, x1, x2)


def grad_trial(basis, idx, x1, x2):
    _check(basis, idx)
    x1 = np.asarray(x1, dtype=float)
    x2 = np.asarray(x2, dtype=float)
    s = x1**2 + x2**2
    g, g1, _ = _radial(basis, idx.j, s)
    Y = eval_harmonic(idx.m, idx.nu, x1, x2)
    Y1, Y2 = grad_harmonic(idx.m, idx.nu, x1, x2)
    return 2 * x1 * g1 * Y + g * Y1, 2 * x2 * g1 * Y + g * Y2


def laplacian_trial(basis, idx, x1, x2):
    """Laplacian of g(|x|^2) Y(x): [4 s g'' + (2d + 4m) g'] Y, since Y is harmonic."""
    _check(basis, idx)
    s = np.asarray(x1) ** 2 + np.asarray(x2) ** 2
    _, g1, g2 = _radial(basis, idx.j, s)
    return (4 * s * g2 + (2 * D + 4 * idx.m) * g1) * eval_harmonic(idx.m, idx.nu, x1, x2)


def sobolev_ball_norm(idx, basis, d=D):
    """|| (1-|x|^2) R ||^2 in the lam-weighted H^1 norm: omega_d 2^-(beta+1) hhat_j."""
    _check(basis, idx)
    return omega(d) * 2.0 ** (-(idx.beta + 1)) * basis.hhat[idx.j]


# monomial forms

def _polymul(a, b):
    out = np.zeros((a.shape[0] + b.shape[0] - 1, a.shape[1] + b.shape[1] - 1))
    for i, j in zip(*np.nonzero(a)):
        out[i:i + b.shape[0], j:j + b.shape[1]] += a[i, j] * b
    return out


def harmonic_monomials(m, nu, normalized=True):
    """Monomial coefficients of Re/Im (x1 + i x2)^m."""
    P = np.zeros((m + 1, m + 1))
    for k in range(m + 1):
        # term binom(m,k) x1^{m-k} (i x2)^k
        re, im = ((1, 0), (0, 1), (-1, 0), (0, -1))[k % 4]
        coef = comb(m, k) * (re if nu == 1 else im)
        P[m - k, k] = coef
    if normalized and m > 0:
        P *= np.sqrt(2.0)
    return P


def _poly_in_s(coeffs_s):
    """sum_i c_i (x1^2 + x2^2)^i as a monomial array."""
    deg = 2 * (len(coeffs_s) - 1)
    P = np.zeros((deg + 1, deg + 1))
    for i, c in enumerate(coeffs_s):
        for k in range(i + 1):
            P[2 * (i - k), 2 * k] += c * comb(i, k)
    return P


def R_monomials(basis, idx, normalized=True):
    """Monomial coefficients of R_{j,nu}^n as an (n+1, n+1) array."""
    _check(basis, idx)
    ct = basis.q(idx.j).power_coeffs()
    # substitute t = 2s - 1
    cs = np.zeros(len(ct))
    for p, c in enumerate(ct):
        for i in range(p + 1):
            cs[i] += c * comb(p, i) * 2.0**i * (-1.0) ** (p - i)
    out = _polymul(_poly_in_s(cs), harmonic_monomials(idx.m, idx.nu, normalized))
    full = np.zeros((idx.n + 1, idx.n + 1))
    full[:out.shape[0], :out.shape[1]] = out[:idx.n + 1, :idx.n + 1]
    return full


def trial_monomials(basis, idx, normalized=True):
    """Monomial coefficients of (1 - |x|^2) R_{j,nu}^n, shape (n+3, n+3)."""
    return _polymul(_poly_in_s([1.0, -1.0]), R_monomials(basis, idx, normalized))


def graded_lex(P, N):
    """Flatten a monomial array in the order 1, x1, x2, x1^2, x1 x2, x2^2, ..."""
    out = []
    for deg in range(N + 1):
        for k in range(deg + 1):
            a, b = deg - k, k
            out.append(P[a, b] if a < P.shape[0] and b < P.shape[1] else 0.0)
    return np.array(out)


def monomial_labels(N):
    labels = []
    for deg in range(N + 1):
        for k in range(deg + 1):
            labels.append(f"x1^{deg - k}*x2^{k}")
    return labels
