"""Optimality side of the embedding: the zeta-shift family drives the norm
ratio arbitrarily close to 2 as eps -> 0+."""

from __future__ import annotations

import math

import numpy as np

from .kernel import quadratic_form_fast
from .report import SweepReport
from .series import zeta_shift_coefficients
from .util import thread_map
from .zeta import DEFAULT_ZETA_CONFIG, ZetaConfig, zeta_real

__all__ = [
    "lower_bound_expression",
    "optimality_ratio",
    "truncated_rayleigh",
    "optimality_sweep",
    "DEFAULT_EPS_GRID",
    "DEFAULT_N_GRID",
]

DEFAULT_EPS_GRID = (0.3, 0.1, 0.03, 0.01, 0.003, 0.001)
DEFAULT_N_GRID = (100, 1_000, 10_000, 100_000)


def _check_eps_open_unit(eps: float) -> float:
    eps = float(eps)
    if not (math.isfinite(eps) and 0.0 < eps < 1.0):
        raise ValueError("eps must lie strictly inside (0, 1)")
    return eps


def lower_bound_expression(eps: float, cfg: ZetaConfig = DEFAULT_ZETA_CONFIG) -> float:
    """Closed lower bound for the squared half-plane norm of the eps-shift family:

        [zeta(1+2e) - zeta(2+e)]/(1-e) + [zeta(1+2e) - 1]/(1+e)
    """
    eps = _check_eps_open_unit(eps)
    z12 = zeta_real(1.0 + 2.0 * eps, cfg)
    z2e = zeta_real(2.0 + eps, cfg)
    return (z12 - z2e) / (1.0 - eps) + (z12 - 1.0) / (1.0 + eps)


def optimality_ratio(eps: float, cfg: ZetaConfig = DEFAULT_ZETA_CONFIG) -> float:
    """lower_bound_expression(eps) / zeta(1+2 eps): strictly below 2 and climbing
    toward 2 as eps decreases."""
    eps = _check_eps_open_unit(eps)
    return lower_bound_expression(eps, cfg) / zeta_real(1.0 + 2.0 * eps, cfg)


def truncated_rayleigh(eps: float, n_terms: int) -> float:
    """Rayleigh quotient of the truncated family: Q_N(eps) / sum_{n<=N} n^{-1-2eps}.

    Strictly below 2 and at most lambda_max(K_N).
    """
    if not (math.isfinite(eps) and eps > 0.0):
        raise ValueError("eps must be a positive real")
    f = zeta_shift_coefficients(eps, n_terms)
    quad = quadratic_form_fast(f.coefficients)
    n = np.arange(1, n_terms + 1, dtype=np.float64)
    denom = math.fsum((n ** (-1.0 - 2.0 * eps)).tolist())
    return quad / denom


def optimality_sweep(
    eps_grid,
    n_grid=(),
    include_rayleigh: bool = True,
    cfg: ZetaConfig = DEFAULT_ZETA_CONFIG,
) -> SweepReport:
    """One Rayleigh row per (eps, N) and one bound row per eps.

    Bound rows carry the N = inf marker: they approximate the untruncated
    family, so the sweep realizes the double limit N -> inf then eps -> 0+.
    Rayleigh-row ratios divide the quadratic form by zeta(1+2 eps); bound-row
    ratios are lower_bound/zeta(1+2 eps). Every ratio is strictly below 2.
    """
    eps_values = [_check_eps_open_unit(e) for e in eps_grid]
    dims = [int(n) for n in n_grid]
    if any(n < 1 for n in dims):
        raise ValueError("N grid entries must be >= 1")

    cells = [(eps, n) for eps in eps_values for n in dims] if include_rayleigh else []
    rayleighs = thread_map(lambda cell: truncated_rayleigh(*cell), cells)
    ray_by_cell = dict(zip(cells, rayleighs))

    rows = []
    for eps in eps_values:
        z12 = zeta_real(1.0 + 2.0 * eps, cfg)
        if include_rayleigh:
            for n in dims:
                ray = ray_by_cell[(eps, n)]
                n_axis = np.arange(1, n + 1, dtype=np.float64)
                denom = math.fsum((n_axis ** (-1.0 - 2.0 * eps)).tolist())
                rows.append(("rayleigh", eps, n, ray, None, ray * denom / z12))
        bound = lower_bound_expression(eps, cfg)
        rows.append(("bound", eps, "inf", None, bound, bound / z12))
    meta = {
        "eps_grid": list(eps_values),
        "n_grid": dims,
        "zeta_cutoff": cfg.cutoff,
        "zeta_correction_terms": cfg.correction_terms,
        "zeta_rel_tolerance": cfg.rel_tolerance,
    }
    return SweepReport(
        columns=("kind", "epsilon", "N", "rayleigh", "lower_bound", "ratio"),
        rows=tuple(rows),
        metadata=meta,
    )
