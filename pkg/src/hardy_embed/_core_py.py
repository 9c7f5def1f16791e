"""Pure-Python (numpy) fallback for the hot kernels in ``_core``.

Uses vectorized cumulative sums instead of compensated loops; the suffix
sweeps still run in decreasing index order so the smallest terms accumulate
first. Accuracy is a little below the compiled core at extreme N but well
inside every tolerance the package tests against.
"""

import numpy as np


def kernel_matvec(v, sqrt_n, inv_n32):
    """Apply the N x N kernel [sqrt(mn)/max(m,n)^2] to v in O(N)."""
    v = np.asarray(v, dtype=np.float64)
    prefix = np.cumsum(sqrt_n * v)
    suffix_incl = np.cumsum((inv_n32 * v)[::-1])[::-1]
    suffix = np.empty_like(suffix_incl)
    suffix[:-1] = suffix_incl[1:]
    suffix[-1] = 0.0
    return inv_n32 * prefix + sqrt_n * suffix


def quadratic_form(re, im, sqrt_n, inv_n32):
    """Real quadratic form a^T K conj(a) = re^T K re + im^T K im, in O(N)."""
    q = float(re @ kernel_matvec(re, sqrt_n, inv_n32))
    q += float(im @ kernel_matvec(im, sqrt_n, inv_n32))
    return q


def inverse_square_tail(m_max, tail_beyond):
    """tail[m-1] = sum_{n=m+1}^{m_max} n^{-2} + tail_beyond, for m = 1..m_max."""
    n = np.arange(1, m_max + 1, dtype=np.float64)
    terms = 1.0 / (n * n)
    incl = np.cumsum(terms[::-1])[::-1]  # incl[m-1] = sum_{n>=m} n^{-2}
    out = np.empty(m_max, dtype=np.float64)
    out[:-1] = incl[1:]
    out[-1] = 0.0
    return out + tail_beyond
