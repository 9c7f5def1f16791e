"""The max-type Hilbert kernel sqrt(mn)/max(m,n)^2: closed-form weight integral,
bilinear form, fast quadratic form, and the row-sum (Schur-test) bound."""

from __future__ import annotations

import math

import numpy as np

from . import _backend
from .zeta import ZETA2, inverse_square_tail_asymptotic

__all__ = [
    "weight_integral_closed",
    "kernel_entry",
    "bilinear_form_naive",
    "quadratic_form_fast",
    "row_sum",
    "row_sum_array",
    "cauchy_schwarz_bound",
    "kernel_tables",
    "dense_kernel",
]


def weight_integral_closed(x: float) -> float:
    """Closed form of (1/pi) int x^{it} dt/(1+t^2) = exp(-|ln x|) = 1/max(x, 1/x).

    Lies in (0, 1], equal to 1 iff x = 1.
    """
    x = float(x)
    if not (math.isfinite(x) and x > 0.0):
        raise ValueError("x must be a finite positive real")
    return min(x, 1.0 / x) if x != 1.0 else 1.0


def kernel_entry(m: int, n: int) -> float:
    """Kernel entry sqrt(mn)/max(m,n)^2; symmetric in (m, n)."""
    if m < 1 or n < 1:
        raise ValueError("kernel indices must be >= 1")
    big = float(max(m, n))
    return math.sqrt(float(m) * float(n)) / (big * big)


def kernel_tables(n_dim: int) -> tuple[np.ndarray, np.ndarray]:
    """Precomputed (sqrt(n), n^{-3/2}) tables for the O(N) kernel sweeps."""
    n = np.arange(1, n_dim + 1, dtype=np.float64)
    sqrt_n = np.sqrt(n)
    return sqrt_n, 1.0 / (n * sqrt_n)


def dense_kernel(n_dim: int) -> np.ndarray:
    """Materialized N x N kernel matrix (oracle use; keep N at desk scale)."""
    n = np.arange(1, n_dim + 1, dtype=np.float64)
    big = np.maximum.outer(n, n)
    return np.sqrt(np.outer(n, n)) / (big * big)


def _pad_pair(a, b) -> tuple[np.ndarray, np.ndarray]:
    a = np.atleast_1d(np.asarray(a, dtype=np.complex128))
    b = np.atleast_1d(np.asarray(b, dtype=np.complex128))
    size = max(a.size, b.size)
    if a.size < size:
        a = np.concatenate([a, np.zeros(size - a.size, dtype=np.complex128)])
    if b.size < size:
        b = np.concatenate([b, np.zeros(size - b.size, dtype=np.complex128)])
    return a, b


def bilinear_form_naive(a, b) -> complex:
    """B(a, b) = sum_m sum_n a_m b_n sqrt(mn)/max(m,n)^2 by the full double sum.

    O(N^2) work; no conjugation is applied to b. Passing b = conj(a) recovers
    the quadratic form. The shorter sequence is zero-padded.
    """
    a, b = _pad_pair(a, b)
    if a.size == 0:
        return 0j
    return complex(a @ dense_kernel(a.size) @ b)


def quadratic_form_fast(a) -> float:
    """Q(a) = sum_{m,n} a_m conj(a_n) sqrt(mn)/max(m,n)^2 in O(N).

    Splits the double sum into one prefix and one suffix sweep; agrees with
    bilinear_form_naive(a, conj(a)) and is real and >= 0 (the kernel is
    positive semidefinite).
    """
    a = np.atleast_1d(np.asarray(a, dtype=np.complex128))
    if a.size == 0:
        return 0.0
    sqrt_n, inv_n32 = kernel_tables(a.size)
    # always copy: .real/.imag are read-only views when a is read-only, and a
    # length-1 view sneaks through ascontiguousarray without a writable copy
    re = np.array(a.real, dtype=np.float64)
    im = np.array(a.imag, dtype=np.float64)
    return float(_backend.quadratic_form(re, im, sqrt_n, inv_n32))


def _inverse_square_tail(m: int) -> float:
    """sum_{n>m} n^{-2}, exact to well below 1e-15 for every m >= 1."""
    if m >= 100:
        return inverse_square_tail_asymptotic(m)
    n = np.arange(m + 1, 1001, dtype=np.float64)
    return math.fsum((1.0 / (n * n)).tolist()) + inverse_square_tail_asymptotic(1000)


def row_sum(m: int) -> float:
    """Row sum sum_n m/max(m,n)^2 = 1 + m (zeta(2) - H_m^{(2)}).

    Strictly increasing in m and strictly below 2 for every m.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    return 1.0 + m * _inverse_square_tail(m)


def row_sum_array(m_max: int) -> np.ndarray:
    """row_sum(m) for m = 1..m_max in one O(m_max) sweep."""
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    tails = _backend.inverse_square_tail(m_max, _inverse_square_tail(m_max))
    m = np.arange(1, m_max + 1, dtype=np.float64)
    return 1.0 + m * tails


def cauchy_schwarz_bound(a, b) -> float:
    """Row-sum Cauchy-Schwarz bound on |B(a, b)|.

    (sum_m |a_m|^2 row_sum(m))^{1/2} (sum_n |b_n|^2 row_sum(n))^{1/2},
    always strictly below 2 ||a|| ||b|| for nonzero inputs.
    """
    a, b = _pad_pair(a, b)
    if a.size == 0:
        return 0.0
    rows = row_sum_array(a.size)
    fa = math.fsum(((a.real**2 + a.imag**2) * rows).tolist())
    fb = math.fsum(((b.real**2 + b.imag**2) * rows).tolist())
    return math.sqrt(fa) * math.sqrt(fb)
