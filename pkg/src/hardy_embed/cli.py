"""Command-line front end: verification runs, sweeps, and report emission.

Every command prints one PASS/FAIL line per checked invariant and exits
nonzero if any check fails. With a fixed --seed the CSV/JSON outputs are
byte-identical across runs. Random polynomials come from a seeded PCG64
generator (numpy default_rng): independent standard complex Gaussians,
normalized to unit coefficient norm.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

import numpy as np

from . import __version__
from ._backend import BACKEND
from .extremal import DEFAULT_EPS_GRID, DEFAULT_N_GRID, optimality_sweep
from .kernel import (
    bilinear_form_naive,
    cauchy_schwarz_bound,
    quadratic_form_fast,
    weight_integral_closed,
)
from .quadrature import (
    QuadratureRule,
    TailBoundError,
    h2i_sq_norm_quadrature,
    local_sweep,
    weight_integral_quadrature,
)
from .report import SweepReport
from .series import DirichletPolynomial, coefficients_from_csv, h2_norm
from .spectral import ConvergenceError, spectral_growth_table
from .svg import line_plot_svg

__all__ = ["main"]


def _random_unit_coefficients(rng: np.random.Generator, n: int) -> np.ndarray:
    a = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return a / np.linalg.norm(a)


def _parse_grid(text: str, cast):
    try:
        return [cast(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad grid value in {text!r}") from None


class _Checker:
    def __init__(self) -> None:
        self.failures = 0

    def check(self, ok: bool, message: str) -> None:
        print(f"{'PASS' if ok else 'FAIL'}: {message}")
        if not ok:
            self.failures += 1


def _emit(report: SweepReport, args) -> None:
    if args.out_csv:
        report.write_csv(args.out_csv)
        print(f"wrote {args.out_csv}")
    if args.out_json:
        report.write_json(args.out_json)
        print(f"wrote {args.out_json}")


def _emit_svg(args, x, y, xlabel, ylabel, title, logx) -> None:
    if args.out_svg:
        Path(args.out_svg).write_text(
            line_plot_svg(x, y, xlabel, ylabel, title=title, logx=logx),
            encoding="utf-8",
            newline="\n",
        )
        print(f"wrote {args.out_svg}")


def _metadata(args, command: str, **extra) -> dict:
    meta = {"command": command, "backend": BACKEND, "version": __version__}
    if hasattr(args, "seed"):
        meta["seed"] = args.seed
    meta.update(extra)
    return meta


def _cmd_check_identity(args) -> int:
    rng = np.random.default_rng(args.seed)
    rule = QuadratureRule(abs_tolerance=0.5 * args.tol)
    rows = []
    worst = 0.0
    for trial in range(args.trials):
        coeffs = _random_unit_coefficients(rng, args.n)
        f = DirichletPolynomial(coeffs)
        quad = h2i_sq_norm_quadrature(f, rule)
        form = quadratic_form_fast(coeffs)
        dev = abs(quad - form)
        worst = max(worst, dev)
        rows.append((trial, args.n, quad, form, dev))
    report = SweepReport(
        columns=("trial", "N", "quadrature_sq", "quadratic_form", "deviation"),
        rows=tuple(rows),
        metadata=_metadata(args, "check-identity", n=args.n, trials=args.trials, tol=args.tol),
    )
    _emit(report, args)
    checker = _Checker()
    checker.check(worst <= args.tol, f"max |quadrature - quadratic form| = {worst:.3e} <= {args.tol:g}")
    return checker.failures


def _cmd_bound(args) -> int:
    rng = np.random.default_rng(args.seed)
    rows = []
    checker = _Checker()
    max_bilinear_ratio = 0.0
    max_quad_ratio = 0.0
    ok_cs, ok_two, ok_quad = True, True, True
    for trial in range(args.trials):
        a = _random_unit_coefficients(rng, args.n)
        b = _random_unit_coefficients(rng, args.n)
        bilinear = abs(bilinear_form_naive(a, b))
        cs = cauchy_schwarz_bound(a, b)
        two_ab = 2.0 * float(np.linalg.norm(a)) * float(np.linalg.norm(b))
        quad = quadratic_form_fast(a)
        two_sq = 2.0 * float(np.linalg.norm(a)) ** 2
        ok_cs &= bilinear <= cs * (1.0 + 1e-12)
        ok_two &= cs < two_ab
        ok_quad &= quad < two_sq
        max_bilinear_ratio = max(max_bilinear_ratio, bilinear / two_ab)
        max_quad_ratio = max(max_quad_ratio, quad / two_sq)
        rows.append((trial, args.n, bilinear, cs, two_ab, quad, two_sq))
    report = SweepReport(
        columns=("trial", "N", "bilinear_abs", "cs_bound", "two_norm_product", "quadratic_form", "two_norm_sq"),
        rows=tuple(rows),
        metadata=_metadata(args, "bound", n=args.n, trials=args.trials),
    )
    _emit(report, args)
    checker.check(ok_cs, "|B(a,b)| <= Cauchy-Schwarz bound on every trial")
    checker.check(ok_two, "Cauchy-Schwarz bound < 2 ||a|| ||b|| on every trial")
    checker.check(ok_quad, "Q(a) < 2 ||a||^2 on every trial")
    print(f"max observed |B|/(2 ||a|| ||b||) = {max_bilinear_ratio:.6f}")
    print(f"max observed Q(a)/(2 ||a||^2)   = {max_quad_ratio:.6f}")
    return checker.failures


def _cmd_spectral(args) -> int:
    table = spectral_growth_table(args.n_grid, tol=args.tol)
    table = SweepReport(
        columns=table.columns,
        rows=table.rows,
        metadata=_metadata(args, "spectral", n_grid=list(args.n_grid), tol=args.tol),
    )
    _emit(table, args)
    lams = table.column("lambda_max")
    resids = table.column("residual")
    for row in table.rows:
        print(f"N={row[0]:>8d}  lambda_max={row[1]:.12f}  residual={row[2]:.2e}  iters={row[3]}")
    checker = _Checker()
    checker.check(
        all(b >= a for a, b in zip(lams, lams[1:])),
        "lambda_max is monotone nondecreasing over the N grid",
    )
    checker.check(
        all(l + r < 2.0 for l, r in zip(lams, resids)),
        "lambda_max + residual < 2 for every N",
    )
    _emit_svg(args, args.n_grid, lams, "N", "lambda_max", "kernel operator norm growth", logx=True)
    return checker.failures


def _cmd_extremal(args) -> int:
    eps_grid = [args.eps] if args.eps is not None else args.eps_grid
    n_grid = () if args.no_rayleigh else tuple(args.n_grid)
    sweep = optimality_sweep(eps_grid, n_grid, include_rayleigh=not args.no_rayleigh)
    sweep = SweepReport(
        columns=sweep.columns,
        rows=sweep.rows,
        metadata={**sweep.metadata, **_metadata(args, "extremal")},
    )
    _emit(sweep, args)
    for row in sweep.rows:
        kind, eps, n_terms, ray, bound, ratio = row
        if kind == "bound":
            print(f"eps={eps:<8g} N=inf     lower_bound={bound:.8f}  ratio={ratio:.8f}")
        else:
            print(f"eps={eps:<8g} N={n_terms:<7d} rayleigh={ray:.8f}  ratio={ratio:.8f}")
    checker = _Checker()
    ratios = [r for r in sweep.column("ratio")]
    checker.check(all(r < 2.0 for r in ratios), "every ratio < 2")
    rays = [r for r in sweep.column("rayleigh") if r is not None]
    checker.check(all(r < 2.0 for r in rays), "every Rayleigh quotient < 2")
    bound_rows = [(row[1], row[5]) for row in sweep.rows if row[0] == "bound"]
    _emit_svg(
        args,
        [r[0] for r in bound_rows],
        [r[1] for r in bound_rows],
        "eps",
        "lower-bound ratio",
        "optimality ratio vs eps",
        logx=True,
    )
    return checker.failures


def _cmd_local_sweep(args) -> int:
    if args.coeffs:
        f = coefficients_from_csv(args.coeffs)
    else:
        f = DirichletPolynomial([1.0, 1.0])
    rule = QuadratureRule(abs_tolerance=args.tol)
    sweep = local_sweep(f, args.tau_grid, rule)
    sweep = SweepReport(
        columns=sweep.columns,
        rows=sweep.rows,
        metadata={**sweep.metadata, **_metadata(args, "local-sweep", tau_grid=list(args.tau_grid))},
    )
    _emit(sweep, args)
    print(f"max window integral = {sweep.metadata['max_value']:.8f}")
    print(f"empirical local ratio (no sharpness claimed) = {sweep.metadata['empirical_ratio']:.8f}")
    a = f.coefficients
    n = np.arange(1, a.size + 1, dtype=np.float64)
    sup_sq = float(np.sum(np.abs(a) / np.sqrt(n))) ** 2
    checker = _Checker()
    checker.check(
        all(v <= sup_sq * (1.0 + 1e-12) for v in sweep.column("value")),
        "every window integral <= (sum |a_n| n^{-1/2})^2",
    )
    _emit_svg(args, args.tau_grid, sweep.column("value"), "tau", "window integral",
              "local window integrals", logx=False)
    return checker.failures


def _cmd_weights(args) -> int:
    rule = QuadratureRule(abs_tolerance=args.tol)
    rows = []
    worst = 0.0
    for k in range(-20, 21):
        x = 2.0**k
        closed = weight_integral_closed(x)
        numeric = weight_integral_quadrature(x, rule)
        dev = abs(numeric - closed)
        worst = max(worst, dev)
        rows.append((k, x, closed, numeric, dev))
    report = SweepReport(
        columns=("k", "x", "closed", "quadrature", "deviation"),
        rows=tuple(rows),
        metadata=_metadata(args, "weights", tol=args.tol),
    )
    _emit(report, args)
    checker = _Checker()
    checker.check(worst <= args.tol, f"max |quadrature - closed form| = {worst:.3e} <= {args.tol:g}")
    return checker.failures


def _add_output_flags(parser) -> None:
    parser.add_argument("--out-csv", type=Path, default=None, help="write rows as CSV")
    parser.add_argument("--out-json", type=Path, default=None, help="write rows + metadata as JSON")
    parser.add_argument("--out-svg", type=Path, default=None, help="write a line plot as SVG")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hardy-embed",
        description="Verify the sqrt(2) embedding constant for Dirichlet polynomials.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-identity", help="quadrature norm vs fast quadratic form")
    p.add_argument("--n", type=int, default=50, help="polynomial length")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-6)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_check_identity)

    p = sub.add_parser("bound", help="bilinear-form and embedding bound checks")
    p.add_argument("--n", type=int, default=100, help="sequence length")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("spectral", help="operator-norm growth table over N")
    p.add_argument("--n-grid", type=lambda s: _parse_grid(s, int), default=[1, 2, 10, 100, 1000])
    p.add_argument("--tol", type=float, default=1e-10)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_spectral)

    p = sub.add_parser("extremal", help="optimality sweep of the zeta-shift family")
    p.add_argument("--eps", type=float, default=None, help="single eps (overrides --eps-grid)")
    p.add_argument("--eps-grid", type=lambda s: _parse_grid(s, float), default=list(DEFAULT_EPS_GRID))
    p.add_argument("--n-grid", type=lambda s: _parse_grid(s, int), default=list(DEFAULT_N_GRID))
    p.add_argument("--no-rayleigh", action="store_true", help="emit only the closed lower-bound rows")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_extremal)

    p = sub.add_parser("local-sweep", help="unit-window integrals over a tau grid")
    p.add_argument("--coeffs", type=Path, default=None, help="CSV file with an a_n column")
    p.add_argument("--tau-grid", type=lambda s: _parse_grid(s, float), default=[0.0, 0.5, 1.0])
    p.add_argument("--tol", type=float, default=1e-8)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_local_sweep)

    p = sub.add_parser("weights", help="closed-form vs numeric weight integral table")
    p.add_argument("--tol", type=float, default=1e-8)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_weights)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        failures = args.func(args)
    except (TailBoundError, ConvergenceError) as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        return 1
    if failures:
        print(f"{failures} check(s) failed", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
