"""Special functions, Gauss quadrature rules, and a dense symmetric eigensolver.

All construction here is pure and stateless; rules are cached read-only.
"""
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ._backend import erfcx_arr, erfcx_kernel, hermite_functions
from .errors import ConfigurationError

MAX_RULE_ORDER = 512
MAX_EIG_DIM = 4096


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss rule: sum(weights * f(nodes)) integrates f against the weight
    function of `kind` ("hermite": e^{-x^2} on R; "genlaguerre": t^alpha e^{-t}
    on (0, inf)) exactly for polynomials of degree <= 2*order - 1."""

    kind: str
    order: int
    alpha: float | None
    nodes: np.ndarray
    weights: np.ndarray


@dataclass(frozen=True)
class SymmetricEigResult:
    eigenvalues: np.ndarray   # ascending
    eigenvectors: np.ndarray  # orthonormal columns, sign-fixed


def erfcx(u):
    """Scaled complementary error function e^{u^2} erfc(u).

    Stable for all float64-representable results; large negative u where
    the true value exceeds the double range returns inf.  Accepts a scalar
    or an ndarray.  NaN input raises ValueError.
    """
    if isinstance(u, np.ndarray):
        shape = u.shape
        return erfcx_arr(np.ascontiguousarray(u, dtype=np.float64).ravel()).reshape(shape)
    return erfcx_kernel(float(u))


def hermite_poly(l, u):
    """Physicists' Hermite polynomial H_l(u) by three-term recurrence."""
    if l < 0 or l != int(l):
        raise ConfigurationError("hermite_poly: l must be a nonnegative integer")
    if l > 200:
        raise ConfigurationError("hermite_poly: l > 200 not supported")
    u = float(u)
    h_prev, h_cur = 1.0, 2.0 * u
    if l == 0:
        return 1.0
    for k in range(2, l + 1):
        h_prev, h_cur = h_cur, 2.0 * u * h_cur - 2.0 * (k - 1) * h_prev
    if math.isinf(h_cur):
        raise OverflowError(f"hermite_poly: H_{l}({u}) exceeds double range")
    return h_cur


def kummer_1f1_polynomial(n, gamma, t):
    """Kummer 1F1(-n; gamma; t), a degree-n polynomial in t.

    Evaluated through the contiguous recurrence
        M_k = [(2k - 2 + gamma - t) M_{k-1} - (k - 1) M_{k-2}] / (k - 1 + gamma),
    never the generic infinite series.
    """
    if gamma <= 0.0:
        raise ConfigurationError("kummer_1f1_polynomial: gamma must be > 0")
    if n < 0 or n != int(n):
        raise ConfigurationError("kummer_1f1_polynomial: n must be a nonnegative integer")
    if n > 200:
        raise ConfigurationError("kummer_1f1_polynomial: n > 200 not supported")
    t = float(t)
    if n == 0:
        return 1.0
    m_prev, m_cur = 1.0, 1.0 - t / gamma
    for k in range(2, n + 1):
        m_prev, m_cur = m_cur, ((2.0 * k - 2.0 + gamma - t) * m_cur - (k - 1.0) * m_prev) / (k - 1.0 + gamma)
    return m_cur


def _christoffel_weights(nodes, recur_a, recur_b, mu0):
    """Weights w_i = 1 / sum_k p_k(x_i)^2 from the orthonormal-polynomial
    recurrence (good relative accuracy where the eigenvector-based
    Golub-Welsch weights lose all significant digits in the tails)."""
    n = len(recur_a)
    with np.errstate(over="ignore", invalid="ignore"):
        p_prev = np.zeros_like(nodes)
        p_cur = np.full_like(nodes, 1.0 / math.sqrt(mu0))
        acc = p_cur * p_cur
        for k in range(1, n):
            p_next = ((nodes - recur_a[k - 1]) * p_cur
                      - (recur_b[k - 2] if k >= 2 else 0.0) * p_prev) / recur_b[k - 1]
            acc += p_next * p_next
            p_prev, p_cur = p_cur, p_next
        w = 1.0 / acc
    # Extreme-tail weights can exceed float64 range downward; the closest
    # representable positive value keeps the all-positive invariant.
    w[~np.isfinite(w) | (w <= 0.0)] = 5e-324
    return w


@lru_cache(maxsize=256)
def _gauss_rule_cached(kind, order, alpha):
    k = np.arange(order, dtype=np.float64)
    if kind == "hermite":
        recur_a = np.zeros(order)
        recur_b = np.sqrt(k[1:] / 2.0)
        mu0 = math.sqrt(math.pi)
    elif kind == "genlaguerre":
        recur_a = 2.0 * k + alpha + 1.0
        recur_b = np.sqrt(k[1:] * (k[1:] + alpha))
        mu0 = math.exp(math.lgamma(alpha + 1.0))
    else:
        raise ConfigurationError(f"gauss_rule: unsupported kind {kind!r}")
    jac = np.diag(recur_a)
    if order > 1:
        jac += np.diag(recur_b, 1) + np.diag(recur_b, -1)
    nodes = np.linalg.eigvalsh(jac)
    weights = _christoffel_weights(nodes, recur_a, recur_b, mu0)
    if kind == "hermite":
        # enforce exact +/- symmetry of the rule
        nodes = 0.5 * (nodes - nodes[::-1])
        weights = 0.5 * (weights + weights[::-1])
        if order % 2 == 1:
            nodes[order // 2] = 0.0
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return QuadratureRule(kind=kind, order=order, alpha=alpha, nodes=nodes, weights=weights)


def gauss_rule(kind, order, alpha=None):
    """Gauss-Hermite or generalized Gauss-Laguerre rule (Golub-Welsch nodes
    from the Jacobi matrix, Christoffel-function weights)."""
    if not 1 <= order <= MAX_RULE_ORDER:
        raise ConfigurationError(f"gauss_rule: order must be in [1, {MAX_RULE_ORDER}]")
    if kind == "hermite":
        if alpha is not None:
            raise ConfigurationError("gauss_rule: alpha only applies to genlaguerre")
        return _gauss_rule_cached("hermite", int(order), None)
    if kind == "genlaguerre":
        if alpha is None or alpha <= -1.0:
            raise ConfigurationError("gauss_rule: genlaguerre requires alpha > -1")
        return _gauss_rule_cached("genlaguerre", int(order), float(alpha))
    raise ConfigurationError(f"gauss_rule: unsupported kind {kind!r}")


def hermite_weight_factors(order):
    """Modified Gauss-Hermite weights w_i e^{x_i^2} = 1 / sum_k phi_k(x_i)^2.

    Computed from normalized oscillator functions so no overflow occurs at
    any order; used when the Gaussian weight is folded into the integrand.
    """
    rule = gauss_rule("hermite", order)
    phi = hermite_functions(order, np.asarray(rule.nodes))
    return rule.nodes, 1.0 / np.sum(phi * phi, axis=0)


def sym_eig(matrix):
    """Full spectrum of a dense real symmetric matrix, ascending, with
    orthonormal sign-fixed eigenvectors."""
    a = np.asarray(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ConfigurationError("sym_eig: matrix must be square")
    if a.shape[0] > MAX_EIG_DIM:
        raise ConfigurationError(f"sym_eig: dimension exceeds {MAX_EIG_DIM}")
    scale = np.max(np.abs(a)) or 1.0
    if np.max(np.abs(a - a.T)) > 1e-12 * scale:
        raise ConfigurationError("sym_eig: matrix not symmetric to 1e-12 relative")
    vals, vecs = np.linalg.eigh(0.5 * (a + a.T))
    # deterministic sign: component of largest magnitude made positive
    anchor = np.argmax(np.abs(vecs), axis=0)
    signs = np.sign(vecs[anchor, np.arange(vecs.shape[1])])
    signs[signs == 0.0] = 1.0
    return SymmetricEigResult(eigenvalues=vals, eigenvectors=vecs * signs)
