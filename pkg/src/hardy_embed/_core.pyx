# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: compensated prefix/suffix sweeps for the max-type kernel.

All sums use Neumaier (improved Kahan) accumulation so the sweeps stay
accurate when the terms span many orders of magnitude.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport fabs

cnp.import_array()


cdef inline void _acc(double y, double* s, double* c) noexcept nogil:
    cdef double t = s[0] + y
    if fabs(s[0]) >= fabs(y):
        c[0] += (s[0] - t) + y
    else:
        c[0] += (y - t) + s[0]
    s[0] = t


def kernel_matvec(double[::1] v, double[::1] sqrt_n, double[::1] inv_n32):
    """Apply the N x N kernel [sqrt(mn)/max(m,n)^2] to v in O(N).

    (Kv)_m = m^{-3/2} * sum_{n<=m} sqrt(n) v_n + sqrt(m) * sum_{n>m} n^{-3/2} v_n
    """
    cdef Py_ssize_t n = v.shape[0]
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] o = out
    cdef double s = 0.0, c = 0.0
    cdef Py_ssize_t i
    for i in range(n):
        _acc(sqrt_n[i] * v[i], &s, &c)
        o[i] = inv_n32[i] * (s + c)
    # suffix in decreasing index order: smallest terms accumulate first
    s = 0.0
    c = 0.0
    for i in range(n - 1, -1, -1):
        o[i] += sqrt_n[i] * (s + c)
        _acc(inv_n32[i] * v[i], &s, &c)
    return out


def quadratic_form(double[::1] re, double[::1] im,
                   double[::1] sqrt_n, double[::1] inv_n32):
    """Real quadratic form a^T K conj(a) = re^T K re + im^T K im, in O(N)."""
    cdef double s = 0.0, c = 0.0
    cdef double[::1] w
    cdef Py_ssize_t i, n = re.shape[0]
    w = kernel_matvec(re, sqrt_n, inv_n32)
    for i in range(n):
        _acc(re[i] * w[i], &s, &c)
    w = kernel_matvec(im, sqrt_n, inv_n32)
    for i in range(n):
        _acc(im[i] * w[i], &s, &c)
    return s + c


def inverse_square_tail(Py_ssize_t m_max, double tail_beyond):
    """tail[m-1] = sum_{n=m+1}^{m_max} n^{-2} + tail_beyond, for m = 1..m_max."""
    out = np.empty(m_max, dtype=np.float64)
    cdef double[::1] o = out
    cdef double s = tail_beyond, c = 0.0, x
    cdef Py_ssize_t m
    for m in range(m_max, 0, -1):
        o[m - 1] = s + c
        x = <double> m
        _acc(1.0 / (x * x), &s, &c)
    return out
