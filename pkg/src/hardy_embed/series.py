"""Finite Dirichlet polynomials: construction, evaluation, and the coefficient norm."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

__all__ = [
    "ComplexPoint",
    "DirichletPolynomial",
    "evaluate",
    "h2_norm",
    "zeta_shift_coefficients",
    "coefficients_from_csv",
]


@dataclass(frozen=True)
class ComplexPoint:
    """A point s = sigma + it in the complex plane."""

    sigma: float
    t: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.sigma) and math.isfinite(self.t)):
            raise ValueError("both components of a ComplexPoint must be finite")

    @property
    def as_complex(self) -> complex:
        return complex(self.sigma, self.t)


class DirichletPolynomial:
    """f(s) = sum_{n=1}^N a_n n^{-s} for a finite coefficient vector (a_1, ..., a_N).

    Coefficients are stored as a read-only complex array indexed from n = 1.
    Trailing zeros are allowed and change no norm or evaluation. Instances are
    immutable and safe to share across threads.
    """

    __slots__ = ("_coeffs", "_log_n")

    def __init__(self, coefficients=()):
        arr = np.asarray(list(coefficients), dtype=np.complex128)
        if arr.ndim != 1:
            raise ValueError("coefficients must be a one-dimensional sequence")
        if arr.size and not np.all(np.isfinite(arr.view(np.float64))):
            raise ValueError("all coefficients must be finite")
        arr.setflags(write=False)
        log_n = np.log(np.arange(1, arr.size + 1, dtype=np.float64))
        log_n.setflags(write=False)
        object.__setattr__(self, "_coeffs", arr)
        object.__setattr__(self, "_log_n", log_n)

    @property
    def coefficients(self) -> np.ndarray:
        return self._coeffs

    @property
    def log_n(self) -> np.ndarray:
        """Precomputed table (ln 1, ..., ln N)."""
        return self._log_n

    def __len__(self) -> int:
        return self._coeffs.size

    def __repr__(self) -> str:
        return f"DirichletPolynomial(N={len(self)})"


def _as_complex(s) -> complex:
    if isinstance(s, ComplexPoint):
        return s.as_complex
    s = complex(s)
    if not (math.isfinite(s.real) and math.isfinite(s.imag)):
        raise ValueError("evaluation point must be finite")
    return s


def evaluate(f: DirichletPolynomial, s) -> complex:
    """Evaluate f at s: sum_n a_n exp(-s ln n). Empty polynomial gives 0.

    Terms are accumulated with exact (fsum) summation of the real and
    imaginary parts, so oscillatory cancellation at large N stays controlled.
    """
    z = _as_complex(s)
    if len(f) == 0:
        return 0j
    terms = f.coefficients * np.exp(-z * f.log_n)
    return complex(math.fsum(terms.real), math.fsum(terms.imag))


def h2_norm(f: DirichletPolynomial) -> float:
    """Coefficient-space norm (sum |a_n|^2)^{1/2}; zero iff all coefficients vanish."""
    if len(f) == 0:
        return 0.0
    a = f.coefficients
    return math.sqrt(math.fsum((a.real * a.real + a.imag * a.imag).tolist()))


def zeta_shift_coefficients(eps: float, n_terms: int) -> DirichletPolynomial:
    """Truncated extremal family: a_n = n^{-1/2-eps} for 1 <= n <= n_terms.

    eps must be strictly positive; the infinite family leaves the space at
    eps = 0.
    """
    if not (eps > 0 and math.isfinite(eps)):
        raise ValueError("eps must be a finite positive real")
    if n_terms < 1:
        raise ValueError("n_terms must be >= 1")
    n = np.arange(1, n_terms + 1, dtype=np.float64)
    return DirichletPolynomial(n ** (-0.5 - eps))


def _parse_complex(text: str) -> complex:
    """Parse 're' or 're+imi' (also 'j' accepted for the imaginary unit)."""
    cleaned = text.strip().replace(" ", "")
    if not cleaned:
        raise ValueError("empty coefficient entry")
    return complex(cleaned.replace("i", "j"))


def coefficients_from_csv(path) -> DirichletPolynomial:
    """Read a one-column CSV with header ``a_n``, rows in index order n = 1, 2, ..."""
    path = Path(path)
    with path.open("r", encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise ValueError(f"{path}: missing 'a_n' header row") from None
        if len(header) != 1 or header[0].strip() != "a_n":
            raise ValueError(f"{path}: expected a single 'a_n' column, got {header}")
        values = []
        for row in reader:
            if not row:
                continue
            if len(row) != 1:
                raise ValueError(f"{path}: expected one value per row, got {row}")
            values.append(_parse_complex(row[0]))
    return DirichletPolynomial(values)
