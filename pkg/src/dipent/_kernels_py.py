"""Pure-numpy twin of the compiled kernels in ``_kernels.pyx``.

Selected by ``dipent._backend`` when the extension is unavailable.  Must
return bit-for-bit comparable results (same algorithms, same branch
points); the compiled version only buys speed.
"""
import math

import numpy as np

_SQRTPI = math.sqrt(math.pi)
_erfc_vec = np.frompyfunc(math.erfc, 1, 1)


def _erfcx_nonneg_scalar(u):
    if u <= 4.0:
        return math.exp(u * u) * math.erfc(u)
    f = 0.0
    for k in range(60, 0, -1):
        f = (0.5 * k) / (u + f)
    return 1.0 / (_SQRTPI * (u + f))


def erfcx(u):
    """Scaled complementary error function exp(u^2)*erfc(u)."""
    if math.isnan(u):
        raise ValueError("erfcx: NaN input")
    if u >= 0.0:
        return _erfcx_nonneg_scalar(u)
    u2 = u * u
    if u2 > 709.0:
        return math.inf  # 2*exp(u^2) exceeds double range
    return 2.0 * math.exp(u2) - _erfcx_nonneg_scalar(-u)


def _erfcx_nonneg_arr(u):
    out = np.empty_like(u)
    small = u <= 4.0
    us = u[small]
    out[small] = np.exp(us * us) * _erfc_vec(us).astype(np.float64)
    ul = u[~small]
    f = np.zeros_like(ul)
    for k in range(60, 0, -1):
        f = (0.5 * k) / (ul + f)
    out[~small] = 1.0 / (_SQRTPI * (ul + f))
    return out


def erfcx_arr(u):
    """Elementwise erfcx over a 1-D float64 array."""
    u = np.ascontiguousarray(u, dtype=np.float64)
    if np.isnan(u).any():
        raise ValueError("erfcx: NaN input")
    out = np.empty_like(u)
    neg = u < 0.0
    out[~neg] = _erfcx_nonneg_arr(u[~neg])
    un = u[neg]
    u2 = un * un
    with np.errstate(over="ignore"):
        refl = 2.0 * np.exp(u2) - _erfcx_nonneg_arr(-un)
    refl[u2 > 709.0] = np.inf
    out[neg] = refl
    return out


def hermite_functions(nmax, x):
    """Normalized harmonic-oscillator eigenfunctions phi_0..phi_{nmax-1}."""
    if nmax < 1:
        raise ValueError("hermite_functions: nmax must be >= 1")
    x = np.ascontiguousarray(x, dtype=np.float64)
    out = np.empty((nmax, x.size), dtype=np.float64)
    out[0] = math.pi ** -0.25 * np.exp(-0.5 * x * x)
    if nmax > 1:
        out[1] = math.sqrt(2.0) * x * out[0]
    for k in range(2, nmax):
        out[k] = math.sqrt(2.0 / k) * x * out[k - 1] - math.sqrt((k - 1.0) / k) * out[k - 2]
    return out


def laguerre_polys(nmax, alpha, t):
    """Generalized Laguerre polynomials L_0..L_{nmax-1} of parameter alpha."""
    if nmax < 1:
        raise ValueError("laguerre_polys: nmax must be >= 1")
    t = np.ascontiguousarray(t, dtype=np.float64)
    out = np.empty((nmax, t.size), dtype=np.float64)
    out[0] = 1.0
    if nmax > 1:
        out[1] = 1.0 + alpha - t
    for k in range(2, nmax):
        out[k] = ((2.0 * k - 1.0 + alpha - t) * out[k - 1] - (k - 1.0 + alpha) * out[k - 2]) / k
    return out
