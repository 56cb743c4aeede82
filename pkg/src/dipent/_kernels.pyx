# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: erfcx and basis-function recurrence tables.

A pure-numpy twin lives in ``_kernels_py``; ``dipent._backend`` picks
whichever imports.  Both expose the same four callables and must agree
to machine precision (see tests/test_backend.py and benchmarks/).
"""
import numpy as np

cimport numpy as cnp
from libc.math cimport INFINITY, erfc, exp, isnan, sqrt

cdef double SQRTPI = 1.7724538509055160273


cdef inline double _erfcx_nonneg(double u) noexcept nogil:
    # exp(u^2)*erfc(u) is stable up to u=4; beyond, the Laplace continued
    # fraction evaluated backward (depth 60 covers u>=4 to ~1e-14 relative).
    cdef double f = 0.0
    cdef int k
    if u <= 4.0:
        return exp(u * u) * erfc(u)
    for k in range(60, 0, -1):
        f = (0.5 * k) / (u + f)
    return 1.0 / (SQRTPI * (u + f))


cpdef double erfcx(double u) except? -1.0:
    """Scaled complementary error function exp(u^2)*erfc(u)."""
    cdef double u2
    if isnan(u):
        raise ValueError("erfcx: NaN input")
    if u >= 0.0:
        return _erfcx_nonneg(u)
    u2 = u * u
    if u2 > 709.0:
        return INFINITY  # 2*exp(u^2) exceeds double range
    return 2.0 * exp(u2) - _erfcx_nonneg(-u)


def erfcx_arr(cnp.ndarray[cnp.float64_t, ndim=1] u):
    """Elementwise erfcx over a 1-D float64 array."""
    cdef Py_ssize_t i, n = u.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(n, dtype=np.float64)
    cdef double v, v2
    cdef bint bad = False
    with nogil:
        for i in range(n):
            v = u[i]
            if isnan(v):
                bad = True
                break
            if v >= 0.0:
                out[i] = _erfcx_nonneg(v)
            else:
                v2 = v * v
                out[i] = INFINITY if v2 > 709.0 else 2.0 * exp(v2) - _erfcx_nonneg(-v)
    if bad:
        raise ValueError("erfcx: NaN input")
    return out


def hermite_functions(int nmax, cnp.ndarray[cnp.float64_t, ndim=1] x):
    """Normalized harmonic-oscillator eigenfunctions phi_0..phi_{nmax-1}.

    Returns an (nmax, len(x)) table built with the stable normalized
    three-term recurrence; values stay O(1) so no overflow for any nmax.
    """
    cdef Py_ssize_t j, m = x.shape[0]
    cdef int k
    cdef cnp.ndarray[cnp.float64_t, ndim=2] out = np.empty((nmax, m), dtype=np.float64)
    cdef double pim4 = 0.7511255444649424828  # pi^{-1/4}
    cdef double xj, a, b
    if nmax < 1:
        raise ValueError("hermite_functions: nmax must be >= 1")
    with nogil:
        for j in range(m):
            xj = x[j]
            out[0, j] = pim4 * exp(-0.5 * xj * xj)
        if nmax > 1:
            for j in range(m):
                out[1, j] = sqrt(2.0) * x[j] * out[0, j]
        for k in range(2, nmax):
            a = sqrt(2.0 / k)
            b = sqrt((k - 1.0) / k)
            for j in range(m):
                out[k, j] = a * x[j] * out[k - 1, j] - b * out[k - 2, j]
    return out


def laguerre_polys(int nmax, double alpha, cnp.ndarray[cnp.float64_t, ndim=1] t):
    """Generalized Laguerre polynomials L_0..L_{nmax-1} of parameter alpha.

    (nmax, len(t)) table via the standard three-term recurrence.
    """
    cdef Py_ssize_t j, m = t.shape[0]
    cdef int k
    cdef cnp.ndarray[cnp.float64_t, ndim=2] out = np.empty((nmax, m), dtype=np.float64)
    if nmax < 1:
        raise ValueError("laguerre_polys: nmax must be >= 1")
    with nogil:
        for j in range(m):
            out[0, j] = 1.0
        if nmax > 1:
            for j in range(m):
                out[1, j] = 1.0 + alpha - t[j]
        for k in range(2, nmax):
            for j in range(m):
                out[k, j] = ((2.0 * k - 1.0 + alpha - t[j]) * out[k - 1, j]
                             -(k - 1.0 + alpha) * out[k - 2, j]) / k
    return out
