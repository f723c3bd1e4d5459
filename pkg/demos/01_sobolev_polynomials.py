# %% [markdown]
# # Radial Sobolev polynomials
#
# The radial factors q_k of the disk basis are orthogonal for a
# derivative-weighted inner product on [-1, 1]. Here we build them two ways
# and look at the first few on the disk.

# %%
import numpy as np

from sobolev_ball.ballbasis import R_monomials, enumerate_indices, graded_lex, sobolev_bases
from sobolev_ball.sobolev1d import SobolevParams, build_basis, gram_schmidt_oracle, sobolev_inner

params = SobolevParams(beta=0.0, kappa=0, lam=8.0)
basis = build_basis(params, K=6)
print("a_{k,k-1}:", np.round(np.diag(basis.a, -1), 6))
print("hhat:", np.round(basis.hhat, 6))

# %% [markdown]
# The banded recursion only touches kappa + 2 coefficients per degree. A
# 40-digit Gram-Schmidt gives the same numbers.

# %%
oracle = gram_schmidt_oracle(params, 6)
print("max |a - a_oracle| =", np.max(np.abs(basis.a - oracle.a)))

G = np.array([[sobolev_inner(params, basis.q(i), basis.q(j)) for j in range(7)]
              for i in range(7)])
print("largest off-diagonal Gram entry:", np.max(np.abs(G - np.diag(np.diag(G)))))

# %% [markdown]
# Substituting t = 2|x|^2 - 1 and multiplying by a harmonic gives the disk
# polynomials R. Their monomial coefficients, scaled so the largest is 1:

# %%
bases = sobolev_bases(3, 0, 8.0)
for idx in enumerate_indices(3):
    c = graded_lex(R_monomials(bases[idx.m], idx, normalized=False), 3)
    c = c / c[np.argmax(np.abs(c))]
    print(idx, np.array2string(c, precision=4, suppress_small=True))
