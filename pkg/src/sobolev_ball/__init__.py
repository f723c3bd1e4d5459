"""Sobolev orthogonal polynomials and a fully diagonalized spectral solver on the unit disk."""
from .ballbasis import (BallIndex, ball_norm_H, enumerate_indices, eval_ball_classical,
                        eval_harmonic, eval_R, sobolev_ball_norm, sobolev_bases)
from .errors import ConsistencyError, NumericFailure, ParameterDomainError
from .jacobi import (eval_jacobi, eval_jacobi_deriv, jacobi_norm, leading_coeff,
                     contiguous_coeffs)
from .quad import disk_rule, gauss_jacobi, integrate
from .sobolev1d import (SobolevParams, build_basis, d_closed, d_recurrence,
                        gram_schmidt_oracle, r_polys, sobolev_inner)
from .solver import (Problem, SobolevExpansion, classical_fourier, eval_partial_sum,
                     ftilde_direct, ftilde_recursive, manufactured_rhs, sobolev_error,
                     solve)

__all__ = [
    "BallIndex", "ball_norm_H", "enumerate_indices", "eval_ball_classical", "eval_harmonic",
    "eval_R", "sobolev_ball_norm", "sobolev_bases",
    "ConsistencyError", "NumericFailure", "ParameterDomainError",
    "eval_jacobi", "eval_jacobi_deriv", "jacobi_norm", "leading_coeff", "contiguous_coeffs",
    "disk_rule", "gauss_jacobi", "integrate",
    "SobolevParams", "build_basis", "d_closed", "d_recurrence", "gram_schmidt_oracle",
    "r_polys", "sobolev_inner",
    "Problem", "SobolevExpansion", "classical_fourier", "eval_partial_sum", "ftilde_direct",
    "ftilde_recursive", "manufactured_rhs", "sobolev_error", "solve",
]

__version__ = "0.1.0"
