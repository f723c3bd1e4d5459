"""Command-line front end.

    sobolev-ball solve --problem exp2d --lambda 8 --kappa 0 -N 3 --out run/
    sobolev-ball convergence --problem exp2d -N 7 --out run/
    sobolev-ball basis --lambda 8 -N 3 --out run/

A ``--config FILE`` of ``key=value`` lines supplies defaults; flags win.
Exit codes: 0 success, 2 usage/config error, 3 numeric failure.
"""
import argparse
import csv
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .ballbasis import (R_monomials, enumerate_indices, graded_lex, monomial_labels,
                        sobolev_bases)
from .errors import ConsistencyError, NumericFailure, ParameterDomainError
from .problems import UnknownProblem, get_problem
from .quad import disk_rule
from .solver import Problem, solve, sobolev_error

MAX_DEGREE = 64
GRID_SIZE = 33

EXIT_USAGE = 2
EXIT_NUMERIC = 3


class ConfigError(Exception):
    pass


@dataclass
class RunConfig:
    problem_id: str = "exp2d"
    lam: float = 8.0
    kappa: int = 0
    N: int = 3
    quad_margin: int = 0
    output_dir: str = "."
    format: str = "csv"

    def validate(self):
        if self.N < 0 or self.N > MAX_DEGREE:
            raise ConfigError(f"degree N must lie in 0..{MAX_DEGREE} (got {self.N})")
        if self.kappa < 0:
            raise ConfigError("kappa must be nonnegative")
        if not self.lam > 0:
            raise ConfigError("lambda must be positive")
        if self.quad_margin < 0:
            raise ConfigError("quad-margin must be nonnegative")
        if self.format not in ("csv", "json"):
            raise ConfigError("format must be csv or json")


# config-file keys -> RunConfig fields
_KEYS = {
    "problem": ("problem_id", str), "lambda": ("lam", float), "kappa": ("kappa", int),
    "n": ("N", int), "degree": ("N", int), "quad_margin": ("quad_margin", int),
    "quad-margin": ("quad_margin", int), "out": ("output_dir", str),
    "format": ("format", str),
}


def read_config_file(path):
    values = {}
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, val = line.partition("=")
        key = key.strip().lower()
        if not sep or key not in _KEYS:
            raise ConfigError(f"{path}:{lineno}: cannot parse {line!r}")
        name, conv = _KEYS[key]
        try:
            values[name] = conv(val.strip())
        except ValueError as exc:
            raise ConfigError(f"{path}:{lineno}: {exc}") from exc
    return values


def build_config(args):
    values = {}
    if args.config:
        try:
            values.update(read_config_file(args.config))
        except OSError as exc:
            raise ConfigError(str(exc)) from exc
    for flag, name in [("problem", "problem_id"), ("lam", "lam"), ("kappa", "kappa"),
                       ("degree", "N"), ("quad_margin", "quad_margin"),
                       ("out", "output_dir"), ("format", "format")]:
        v = getattr(args, flag)
        if v is not None:
            values[name] = v
    cfg = RunConfig(**values)
    cfg.validate()
    return cfg


def _fmt(x):
    return format(float(x), ".17g")


def _write_csv(path, header, rows):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([_fmt(v) if isinstance(v, (float, np.floating)) else v for v in row])


def _write_json(path, doc):
    Path(path).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")


def _meta(cfg):
    return {"problem": cfg.problem_id, "lambda": cfg.lam, "kappa": cfg.kappa, "N": cfg.N}


def cmd_solve(cfg):
    entry = get_problem(cfg.problem_id, cfg.kappa, cfg.lam)
    problem = Problem(cfg.kappa, cfg.lam, entry.f, entry.exact_u, entry.exact_grad_u)
    e = solve(problem, cfg.N, margin=cfg.quad_margin)
    out = Path(cfg.output_dir)
    out.mkdir(parents=True, exist_ok=True)

    rows = [(i.n, i.j, i.nu, e.coeffs[i], e.ftilde[i], e.norms[i]) for i in enumerate_indices(cfg.N)]
    header = ["n", "j", "nu", "u_hat", "f_tilde", "norm_sq"]
    if cfg.format == "csv":
        _write_csv(out / "coefficients.csv", header, rows)
    else:
        doc = dict(_meta(cfg), rows=[dict(zip(header, r)) for r in rows])
        _write_json(out / "coefficients.json", doc)

    g = np.linspace(-1.0, 1.0, GRID_SIZE)
    X1, X2 = np.meshgrid(g, g, indexing="ij")
    inside = X1**2 + X2**2 <= 1.0
    x1, x2 = X1[inside], X2[inside]
    uN = e(x1, x2)
    _write_csv(out / "grid.csv", ["x1", "x2", "u_N"], zip(x1, x2, uN))

    summary = dict(_meta(cfg), count=len(rows), grid_points=int(inside.sum()),
                   grid_size=GRID_SIZE, u_N_center=float(e(0.0, 0.0)),
                   u_N_grid_max=float(np.max(np.abs(uN))))
    if entry.exact_u is not None:
        summary["grid_max_abs_error"] = float(np.max(np.abs(entry.exact_u(x1, x2) - uN)))
    _write_json(out / "summary.json", summary)
    return e


def error_rule(N, kappa, margin=0):
    return disk_rule(N + kappa + 30 + margin, 4 * N + 48 + 2 * margin)


def cmd_convergence(cfg):
    entry = get_problem(cfg.problem_id, cfg.kappa, cfg.lam)
    if entry.exact_u is None:
        raise ConfigError(f"problem {cfg.problem_id} has no exact solution")
    rule = error_rule(cfg.N, cfg.kappa, cfg.quad_margin)
    rows = []
    for N in range(cfg.N + 1):
        problem = Problem(cfg.kappa, cfg.lam, entry.f, entry.exact_u, entry.exact_grad_u)
        e = solve(problem, N, margin=cfg.quad_margin)
        eps = sobolev_error(e, entry.exact_u, rule, entry.exact_grad_u)
        rows.append((N, eps, np.log10(eps) if eps > 0 else -np.inf))
    out = Path(cfg.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    header = ["N", "eps", "log10_eps"]
    if cfg.format == "csv":
        _write_csv(out / "errors.csv", header, rows)
    else:
        _write_json(out / "errors.json", dict(_meta(cfg), rows=[
            {"N": n, "eps": eps, "log10_eps": lg if np.isfinite(lg) else None}
            for n, eps, lg in rows]))
    return rows


def basis_rows(N, kappa, lam):
    """Scaled monomial rows of every R_{j,nu}^n with n <= N."""
    bases = sobolev_bases(N, kappa, lam)
    rows = []
    for idx in enumerate_indices(N):
        coeffs = graded_lex(R_monomials(bases[idx.m], idx, normalized=False), N)
        coeffs = coeffs / coeffs[np.argmax(np.abs(coeffs))]
        harmonic = f"{'cos' if idx.nu == 1 else 'sin'}{idx.m}"
        rows.append((idx, f"q_{idx.j}^({idx.m:g})", harmonic, coeffs))
    return rows


def cmd_basis(cfg):
    rows = basis_rows(cfg.N, cfg.kappa, cfg.lam)
    out = Path(cfg.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    labels = monomial_labels(cfg.N)
    if cfg.format == "csv":
        _write_csv(out / "basis.csv", ["n", "j", "nu", "radial", "harmonic"] + labels,
                   [(i.n, i.j, i.nu, r, h, *map(float, c)) for i, r, h, c in rows])
    else:
        _write_json(out / "basis.json", dict(_meta(cfg), monomials=labels, rows=[
            {"n": i.n, "j": i.j, "nu": i.nu, "radial": r, "harmonic": h,
             "coefficients": [float(v) for v in c]} for i, r, h, c in rows]))
    return rows


def make_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--problem", help="problem id (exp2d, zero, paraboloid, manufactured:seed=K)")
    common.add_argument("--lambda", dest="lam", type=float, help="potential strength lambda > 0")
    common.add_argument("--kappa", type=int, help="exponent of (1-|x|^2) in the potential")
    common.add_argument("-N", "--degree", type=int, help="truncation degree (max for convergence)")
    common.add_argument("--quad-margin", dest="quad_margin", type=int,
                        help="extra quadrature points beyond the default sizing")
    common.add_argument("--out", help="output directory")
    common.add_argument("--format", choices=["csv", "json"])
    common.add_argument("--config", help="key=value file with defaults")

    parser = argparse.ArgumentParser(prog="sobolev-ball", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("solve", parents=[common], help="compute Fourier-Sobolev coefficients")
    sub.add_parser("convergence", parents=[common], help="Sobolev-norm error for N = 0..N")
    sub.add_parser("basis", parents=[common], help="monomial table of the Sobolev basis")
    return parser


COMMANDS = {"solve": cmd_solve, "convergence": cmd_convergence, "basis": cmd_basis}


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        cfg = build_config(args)
        COMMANDS[args.command](cfg)
    except UnknownProblem as exc:
        print(f"error: unknown problem {exc.args[0]!r}", file=sys.stderr)
        return EXIT_USAGE
    except (ConfigError, ParameterDomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NumericFailure, ConsistencyError, FloatingPointError) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    return 0


if __name__ == "__main__":
    sys.exit(main())
