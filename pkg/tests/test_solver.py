import numpy as np
import pytest
from numpy.testing import assert_allclose

from sobolev_ball.ballbasis import (BallIndex, enumerate_indices, eval_ball_classical,
                                    eval_trial, grad_trial, sobolev_ball_norm, sobolev_bases)
from sobolev_ball.errors import NumericFailure
from sobolev_ball.problems import (ProblemRegistryEntry, UnknownProblem, get_problem,
                                   problem_ids, random_coefficients)
from sobolev_ball.quad import default_disk_rule, disk_rule
from sobolev_ball.solver import (Problem, classical_fourier, fd_gradient, ftilde_all,
                                 ftilde_direct, ftilde_recursive, grad_partial_sum,
                                 manufactured_rhs, solve, sobolev_error)

REFERENCE_U3 = [0.9938, -0.9958, -0.9958, 0.5505, 1.1005, 0.5505,
                -0.1808, -0.5423, -0.5423, -0.1808]
# frozen from the first verified run (about 4.6e-8)
EPS_RATIO_BOUND = 1e-6


def _problem(pid, kappa=0, lam=8.0):
    e = get_problem(pid, kappa, lam)
    return Problem(kappa, lam, e.f, e.exact_u, e.exact_grad_u), e


@pytest.fixture(scope="module")
def error_rule():
    return disk_rule(40, 80)


@pytest.fixture(scope="module")
def exp2d_u3():
    return solve(_problem("exp2d")[0], 3)


class TestProblems:
    def test_exp2d_rhs_matches_reference_form(self):
        e = get_problem("exp2d", 0, 8.0)
        x1, x2 = np.random.default_rng(1).uniform(-0.7, 0.7, (2, 20))
        ref = np.exp(-x1 - x2) * (-6 * x1**2 - 6 * x2**2 - 4 * x1 - 4 * x2 + 10)
        assert_allclose(e.f(x1, x2), ref, rtol=1e-13)

    @pytest.mark.parametrize("kappa", [0, 1, 2])
    def test_exp2d_pde_residual(self, kappa):
        e = get_problem("exp2d", kappa, 3.0)
        x1, x2 = np.random.default_rng(2).uniform(-0.6, 0.6, (2, 10))
        h = 1e-3
        u = e.exact_u
        lap = (u(x1 + h, x2) + u(x1 - h, x2) + u(x1, x2 + h) + u(x1, x2 - h) - 4 * u(x1, x2)) / h**2
        lhs = -lap + 3.0 * (1 - x1**2 - x2**2) ** kappa * u(x1, x2)
        assert_allclose(lhs, e.f(x1, x2), atol=1e-5)

    def test_exact_gradients(self):
        for pid in ("exp2d", "paraboloid", "manufactured:seed=3"):
            e = get_problem(pid, 0, 8.0)
            x1, x2 = np.random.default_rng(4).uniform(-0.6, 0.6, (2, 10))
            g = e.exact_grad_u(x1, x2)
            fd = fd_gradient(e.exact_u)(x1, x2)
            assert_allclose(g[0], fd[0], atol=1e-9)
            assert_allclose(g[1], fd[1], atol=1e-9)

    def test_registry(self):
        assert "exp2d" in problem_ids()
        with pytest.raises(UnknownProblem):
            get_problem("nope", 0, 1.0)
        with pytest.raises(UnknownProblem):
            get_problem("manufactured:seed=x", 0, 1.0)
        assert get_problem("manufactured", 0, 1.0).coefficients == random_coefficients(0)

    def test_entry_needs_gradient(self):
        with pytest.raises(ValueError):
            ProblemRegistryEntry("x", lambda a, b: a, exact_u=lambda a, b: a)


class TestDirect:
    def test_zero(self):
        e = solve(_problem("zero")[0], 4)
        assert all(v == 0.0 for v in e.coeffs.values())
        assert len(e.coeffs) == 15

    @pytest.mark.parametrize("kappa", [0, 1])
    def test_paraboloid_one_hot(self, kappa):
        p, _ = _problem("paraboloid", kappa)
        e = solve(p, 4)
        head = BallIndex(0, 0)
        assert_allclose(e.ftilde[head], e.norms[head], rtol=1e-12)
        for i, v in e.coeffs.items():
            assert abs(v - (i == head)) <= 1e-9

    def test_paraboloid_degree_zero(self):
        e = solve(_problem("paraboloid")[0], 0)
        assert list(e.coeffs) == [BallIndex(0, 0)]
        assert_allclose(e.coeffs[BallIndex(0, 0)], 1.0, rtol=1e-13)

    def test_reference_u3(self, exp2d_u3):
        assert_allclose(exp2d_u3.monomial_coeffs(), REFERENCE_U3, atol=5e-4, rtol=0)
        assert abs(exp2d_u3(0.0, 0.0) - 0.9938) <= 5e-4

    def test_count_and_norms(self, exp2d_u3):
        assert len(exp2d_u3.coeffs) == 10
        assert all(v > 0 for v in exp2d_u3.norms.values())

    def test_linearity(self):
        bases = sobolev_bases(5, 1, 2.0)
        f1 = get_problem("exp2d", 1, 2.0).f
        f2 = get_problem("manufactured:seed=5", 1, 2.0).f
        s1 = solve(Problem(1, 2.0, f1), 5, bases=bases)
        s2 = solve(Problem(1, 2.0, f2), 5, bases=bases)
        s12 = solve(Problem(1, 2.0, lambda a, b: f1(a, b) + f2(a, b)), 5, bases=bases)
        scale = max(abs(v) for v in s12.coeffs.values())
        for i in s12.coeffs:
            assert abs(s12.coeffs[i] - s1.coeffs[i] - s2.coeffs[i]) <= 1e-12 * scale

    def test_nonfinite_rhs(self):
        with pytest.raises(NumericFailure):
            solve(Problem(0, 1.0, lambda a, b: np.full_like(a, np.inf)), 2)

    def test_negative_degree(self):
        with pytest.raises(ValueError):
            solve(_problem("zero")[0], -1)

    def test_direct_single_index(self):
        p, _ = _problem("exp2d")
        bases = sobolev_bases(4, 0, 8.0)
        rule = default_disk_rule(4)
        allv = ftilde_all(p.f, bases, 4, rule)
        i = BallIndex(4, 1, 2)
        assert ftilde_direct(p.f, i, bases[i.m], rule) == allv[i]


class TestManufactured:
    def test_one_hot_rhs(self):
        bases = sobolev_bases(0, 0, 8.0)
        f, u, _ = manufactured_rhs({BallIndex(0, 0): 1.0}, 0, 8.0, bases)
        x1, x2 = np.random.default_rng(0).uniform(-0.7, 0.7, (2, 10))
        s = x1**2 + x2**2
        assert_allclose(f(x1, x2), 4 + 8 * (1 - s), rtol=1e-13)
        assert_allclose(u(x1, x2), 1 - s, rtol=1e-13)

    def test_zero_map(self):
        f, _, _ = manufactured_rhs({}, 0, 8.0, {})
        assert np.all(f(np.array([0.1, 0.2]), np.array([0.0, 0.3])) == 0)

    @pytest.mark.parametrize("kappa", [0, 1, 2])
    @pytest.mark.parametrize("seed", [1, 2, 3])
    def test_round_trip(self, kappa, seed):
        c = random_coefficients(seed)
        bases = sobolev_bases(4, kappa, 8.0)
        f, _, _ = manufactured_rhs(c, kappa, 8.0, bases)
        e = solve(Problem(kappa, 8.0, f), 4, bases=bases)
        scale = max(abs(v) for v in c.values())
        for i, v in c.items():
            assert abs(e.coeffs[i] - v) <= 1e-9 * scale

    def test_round_trip_higher_truncation(self):
        c = random_coefficients(9)
        bases = sobolev_bases(7, 0, 8.0)
        f, _, _ = manufactured_rhs(c, 0, 8.0, bases)
        e = solve(Problem(0, 8.0, f), 7, bases=bases)
        for i, v in e.coeffs.items():
            assert abs(v - c.get(i, 0.0)) <= 1e-9

    def test_error_in_span(self, error_rule):
        p, entry = _problem("manufactured:seed=4")
        e = solve(p, 4)
        x1, x2 = error_rule.x1, error_rule.x2
        g = entry.exact_grad_u(x1, x2)
        size = error_rule.integrate(8 * entry.exact_u(x1, x2) ** 2 + g[0] ** 2 + g[1] ** 2)
        assert sobolev_error(e, entry.exact_u, error_rule, entry.exact_grad_u) <= 1e-16 * size


class TestInvariants:
    def test_boundary(self, exp2d_u3):
        theta = 2 * np.pi * np.arange(64) / 64
        assert np.max(np.abs(exp2d_u3(np.cos(theta), np.sin(theta)))) <= 1e-14

    @pytest.mark.parametrize("kappa", [0, 1])
    def test_galerkin_conditions(self, kappa):
        p, _ = _problem("exp2d", kappa)
        e = solve(p, 6)
        rule = disk_rule(30, 60)
        x1, x2 = rule.x1, rule.x2
        g1, g2 = grad_partial_sum(e, x1, x2)
        u = e(x1, x2)
        fv = p.f(x1, x2)
        w = (1 - x1**2 - x2**2) ** kappa
        rhs = {}
        lhs = {}
        for i in enumerate_indices(6):
            b = e.bases[i.m]
            v = eval_trial(b, i, x1, x2)
            v1, v2 = grad_trial(b, i, x1, x2)
            lhs[i] = rule.integrate(g1 * v1 + g2 * v2 + p.lam * w * u * v)
            rhs[i] = rule.integrate(fv * v)
        scale = max(abs(v) for v in rhs.values())
        for i in rhs:
            assert abs(lhs[i] - rhs[i]) <= 1e-7 * max(abs(rhs[i]), 1e-6 * scale)

    def test_convergence(self, error_rule):
        p, entry = _problem("exp2d")
        eps = [sobolev_error(solve(p, N), entry.exact_u, error_rule, entry.exact_grad_u)
               for N in range(8)]
        assert all(b < a for a, b in zip(eps, eps[1:]))
        logs = np.log10(eps)
        assert (logs[2] - logs[7]) / 5 >= 1.0
        assert eps[7] / eps[3] < EPS_RATIO_BOUND

    def test_fd_gradient_fallback(self, error_rule):
        p, entry = _problem("exp2d")
        e = solve(p, 3)
        exact = sobolev_error(e, entry.exact_u, error_rule, entry.exact_grad_u)
        approx = sobolev_error(e, entry.exact_u, error_rule)
        assert_allclose(approx, exact, rtol=1e-8)


@pytest.fixture(scope="module")
def rule():
    return default_disk_rule(7)


class TestClassicalAndRecursive:
    def test_one_hot(self, rule):
        target = BallIndex(2, 1, 1)
        f = lambda a, b: eval_ball_classical(1.0, target, a, b)
        for i in enumerate_indices(4):
            assert abs(classical_fourier(f, i, rule) - (i == target)) <= 1e-10

    def test_constant(self, rule):
        for i in enumerate_indices(4):
            c = classical_fourier(lambda a, b: np.ones_like(a), i, rule)
            assert abs(c - (i == BallIndex(0, 0))) <= 1e-12

    @pytest.mark.parametrize("kappa", [0, 1, 2])
    def test_dual_path(self, kappa, rule):
        p, _ = _problem("exp2d", kappa)
        bases = sobolev_bases(7, kappa, 8.0)
        direct = ftilde_all(p.f, bases, 7, rule)
        classical = {i: classical_fourier(p.f, i, rule) for i in direct}
        rec = ftilde_recursive(classical, bases, kappa)
        scale = max(abs(v) for v in direct.values())
        for i in direct:
            # coefficients forced to zero by the x1 <-> x2 symmetry are compared absolutely
            assert abs(rec[i] - direct[i]) <= 1e-8 * max(abs(direct[i]), 1e-6 * scale)

    def test_one_hot_chain(self, rule):
        bases = sobolev_bases(6, 0, 8.0)
        target = BallIndex(5, 2, 2)
        f, _, _ = manufactured_rhs({target: 1.0}, 0, 8.0, bases)
        classical = {i: classical_fourier(f, i, rule) for i in enumerate_indices(6)}
        rec = ftilde_recursive(classical, bases, 0)
        norm = sobolev_ball_norm(target, bases[target.m])
        for i, v in rec.items():
            assert abs(v - norm * (i == target)) <= 1e-10 * norm

    def test_chain_heads(self, rule):
        p, _ = _problem("exp2d")
        bases = sobolev_bases(3, 0, 8.0)
        classical = {i: classical_fourier(p.f, i, rule) for i in enumerate_indices(3)}
        rec = ftilde_recursive(classical, bases, 0)
        direct = ftilde_all(p.f, bases, 3, rule)
        for i in rec:
            if i.j == 0:
                assert_allclose(rec[i], direct[i], rtol=1e-12, atol=1e-16)

    def test_missing_predecessor(self, rule):
        bases = sobolev_bases(4, 0, 8.0)
        with pytest.raises(IndexError):
            ftilde_recursive({BallIndex(4, 1, 1): 1.0}, bases, 0)
