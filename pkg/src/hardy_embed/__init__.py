"""Numerical toolkit for the sqrt(2) embedding constant of the Hardy-Hilbert
space of Dirichlet series.

Two independent routes to the conformally invariant half-plane norm of a
finite Dirichlet polynomial (weighted quadrature and an O(N) kernel quadratic
form), the row-sum bound on the associated Hilbert-type bilinear form, a
matrix-free spectral-norm estimate of the truncated kernel, and the
zeta-shift extremal sweep that drives the norm ratio toward 2.
"""

from ._backend import BACKEND
from .extremal import (
    lower_bound_expression,
    optimality_ratio,
    optimality_sweep,
    truncated_rayleigh,
)
from .kernel import (
    bilinear_form_naive,
    cauchy_schwarz_bound,
    kernel_entry,
    quadratic_form_fast,
    row_sum,
    weight_integral_closed,
)
from .quadrature import (
    QuadratureRule,
    TailBoundError,
    h2i_sq_norm_quadrature,
    local_sq_integral,
    local_sweep,
    weight_integral_quadrature,
)
from .report import SweepReport
from .series import (
    ComplexPoint,
    DirichletPolynomial,
    coefficients_from_csv,
    evaluate,
    h2_norm,
    zeta_shift_coefficients,
)
from .spectral import (
    ConvergenceError,
    KernelOperator,
    SpectralEstimate,
    kernel_matvec,
    operator_norm_estimate,
    spectral_growth_table,
)
from .zeta import ZetaConfig, harmonic2, zeta_real

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ComplexPoint",
    "ConvergenceError",
    "DirichletPolynomial",
    "KernelOperator",
    "QuadratureRule",
    "SpectralEstimate",
    "SweepReport",
    "TailBoundError",
    "ZetaConfig",
    "bilinear_form_naive",
    "cauchy_schwarz_bound",
    "coefficients_from_csv",
    "evaluate",
    "h2_norm",
    "h2i_sq_norm_quadrature",
    "harmonic2",
    "kernel_entry",
    "kernel_matvec",
    "local_sq_integral",
    "local_sweep",
    "lower_bound_expression",
    "operator_norm_estimate",
    "optimality_ratio",
    "optimality_sweep",
    "quadratic_form_fast",
    "row_sum",
    "spectral_growth_table",
    "truncated_rayleigh",
    "weight_integral_closed",
    "weight_integral_quadrature",
    "zeta_real",
    "zeta_shift_coefficients",
]
