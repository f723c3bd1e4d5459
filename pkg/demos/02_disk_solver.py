# %% [markdown]
# # A diagonal spectral solve on the disk
#
# We solve -Lap u + 8 u = f on the unit disk with u = 0 on the circle, where
# the exact solution is u = exp(-x1 - x2)(1 - x1^2 - x2^2). Every expansion
# coefficient is one quadrature divided by a norm known in closed form.

# %%
import numpy as np

from sobolev_ball.problems import get_problem
from sobolev_ball.quad import disk_rule
from sobolev_ball.solver import Problem, solve, sobolev_error

entry = get_problem("exp2d", kappa=0, lam=8.0)
problem = Problem(0, 8.0, entry.f, entry.exact_u, entry.exact_grad_u)

u3 = solve(problem, 3)
print("u_3 / (1 - |x|^2) in monomials 1, x1, x2, x1^2, ...:")
print(np.round(u3.monomial_coeffs(), 4))

# %% [markdown]
# The error in the energy norm falls by well over an order of magnitude per
# degree.

# %%
rule = disk_rule(40, 80)
for N in range(8):
    eps = sobolev_error(solve(problem, N), entry.exact_u, rule, entry.exact_grad_u)
    print(f"N={N}  eps={eps:.3e}")

# %% [markdown]
# Pointwise error of u_3 on a coarse grid inside the disk.

# %%
g = np.linspace(-0.9, 0.9, 7)
X1, X2 = np.meshgrid(g, g)
inside = X1**2 + X2**2 < 1
err = np.where(inside, entry.exact_u(X1, X2) - u3(X1, X2), np.nan)
print(np.array2string(err, precision=4, suppress_small=True))
