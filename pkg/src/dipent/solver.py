"""Rayleigh-Ritz solution of the relative-motion problem.

Two basis families:

* parity-restricted harmonic-oscillator eigenfunctions (quasi-1D models,
  whose interaction is finite at contact), assembled with a half-line
  Gauss-Legendre rule -- the integrand is one-sidedly analytic on [0, A],
  so the rule converges geometrically and passes the order-doubling
  certificate, which a full-line Gauss-Hermite rule cannot do across the
  |x| kink at the origin;

* the pseudoharmonic half-line basis x^{gamma-1/2} e^{-x^2/2} L_n^{(gamma-1)}(x^2)
  (strict-1D |x|^-3 model, where oscillator-basis integrals diverge).
  Kinetic plus trap reduce through the pseudoharmonic operator identity to
  the exact ladder (2n + gamma) minus the centrifugal moment of x^-2, which
  has a Gamma-function closed form; the x^-3 interaction becomes a Laguerre
  moment integrated exactly by a generalized Gauss-Laguerre rule with
  alpha = gamma - 5/2 (finite precisely because gamma > 3/2).
"""
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ._backend import hermite_functions, laguerre_polys
from .errors import ConfigurationError, ConvergenceError
from .numerics import gauss_rule
from .potential import InteractionModel, relative_potential

GAMMA_MIN = 1.5
MAX_PSEUDO_SIZE = 200
MAX_HO_SIZE = 300
CONVERGENCE_TOL = 1e-5
_HO_CERT_STEP = 20
_PSEUDO_CERT_STEP = 10


@dataclass(frozen=True)
class BasisSpec:
    """Variational basis: kind in {"ho_even", "ho_odd", "pseudoharmonic"},
    size N, and the nonlinear exponent gamma (> 3/2) for the pseudoharmonic
    family."""

    kind: str
    size: int
    gamma: float | None = None

    def __post_init__(self):
        if self.kind not in ("ho_even", "ho_odd", "pseudoharmonic"):
            raise ConfigurationError(f"BasisSpec: unknown kind {self.kind!r}")
        if self.size < 1:
            raise ConfigurationError("BasisSpec: size must be >= 1")
        if self.kind == "pseudoharmonic":
            if self.gamma is None or self.gamma <= GAMMA_MIN:
                raise ConfigurationError("BasisSpec: pseudoharmonic requires gamma > 3/2")
            if self.size > MAX_PSEUDO_SIZE:
                raise ConfigurationError(f"BasisSpec: pseudoharmonic size capped at {MAX_PSEUDO_SIZE}")
        else:
            if self.gamma is not None:
                raise ConfigurationError("BasisSpec: gamma only applies to pseudoharmonic")
            if self.size > MAX_HO_SIZE:
                raise ConfigurationError(f"BasisSpec: oscillator size capped at {MAX_HO_SIZE}")


@dataclass(frozen=True)
class RelativeSolution:
    """Lowest eigenpair of the relative-motion Hamiltonian: energy,
    expansion coefficients, parity, and a callable wavefunction."""

    energy: float
    coefficients: np.ndarray
    basis: BasisSpec
    parity: str
    model: InteractionModel
    converged: bool
    energy_delta: float

    def evaluate(self, x):
        """Wavefunction at relative coordinate(s) x, unit L2 norm on the line."""
        scalar = np.isscalar(x)
        x = np.atleast_1d(np.asarray(x, dtype=np.float64))
        if self.basis.kind == "pseudoharmonic":
            vals = _pseudoharmonic_eval(self.coefficients, self.basis.gamma, np.abs(x))
            vals /= math.sqrt(2.0)
            if self.parity == "odd":
                vals = vals * np.sign(x)
        else:
            idx = _ho_indices(self.basis.size, self.parity)
            table = hermite_functions(idx[-1] + 1, x.ravel())
            vals = (self.coefficients @ table[idx]).reshape(x.shape)
        return float(vals[0]) if scalar else vals


def _ho_indices(size, parity):
    return 2 * np.arange(size) + (0 if parity == "even" else 1)


def _parity_of(basis: BasisSpec, parity=None):
    if basis.kind == "ho_even":
        return "even"
    if basis.kind == "ho_odd":
        return "odd"
    return parity or "even"


@lru_cache(maxsize=32)
def _legendre_rule(order):
    x, w = np.polynomial.legendre.leggauss(order)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def _ho_interaction(idx, model, quad_order=None):
    """V_ab = <phi_a| interaction |phi_b> for same-parity oscillator indices,
    as 2 * integral over [0, A] with A past the classical turning point."""
    nmax = int(idx[-1]) + 1
    half_width = math.sqrt(2.0 * nmax + 1.0) + 6.0
    order = quad_order or max(384, 4 * nmax)
    xs, ws = _legendre_rule(order)
    x = 0.5 * half_width * (xs + 1.0)
    w = 0.5 * half_width * ws
    table = hermite_functions(nmax, x)[idx]
    pot = relative_potential(x, model)
    v = 2.0 * ((table * (w * pot)) @ table.T)
    return 0.5 * (v + v.T)


def _pseudo_lognorms(size, gamma):
    n = np.arange(size)
    return 0.5 * (math.log(2.0)
                  + np.array([math.lgamma(k + 1.0) for k in n])
                  - np.array([math.lgamma(k + gamma) for k in n]))


def _pseudo_quad_order(size):
    return min(max(4 * size, 64), 512)


def _pseudoharmonic_blocks(size, gamma, quad_order=None):
    """(inv2, inv3): moment matrices of x^-2 (closed form) and x^-3
    (exact Gauss-Laguerre) in the normalized pseudoharmonic basis."""
    n = np.arange(size)
    half = np.exp(_pseudo_lognorms(size, gamma))
    pref = np.outer(half, half) / 2.0
    # sum_{j<=min} Gamma(j+gamma-1)/j! telescopes to Gamma(min+gamma)/(min! (gamma-1))
    logs = (np.array([math.lgamma(k + gamma) - math.lgamma(k + 1.0) for k in n])
            - math.log(gamma - 1.0))
    inv2 = pref * np.exp(logs[np.minimum.outer(n, n)])
    rule = gauss_rule("genlaguerre", quad_order or _pseudo_quad_order(size), alpha=gamma - 2.5)
    table = laguerre_polys(size, gamma - 1.0, np.asarray(rule.nodes))
    inv3 = pref * ((table * rule.weights) @ table.T)
    return inv2, 0.5 * (inv3 + inv3.T)


def _pseudoharmonic_matrix(size, gamma, g, quad_order=None):
    nu = (gamma - 1.5) * (gamma - 0.5) / 2.0
    inv2, inv3 = _pseudoharmonic_blocks(size, gamma, quad_order)
    h = np.diag(2.0 * np.arange(size) + gamma) - nu * inv2 + g * math.sqrt(2.0) * inv3
    return 0.5 * (h + h.T)


def _pseudoharmonic_eval(coefficients, gamma, r):
    """phi(r) = sum_n c_n u_n(r) on the half line r >= 0."""
    r = np.asarray(r, dtype=np.float64)
    size = len(coefficients)
    table = laguerre_polys(size, gamma - 1.0, (r * r).ravel())
    series = ((coefficients * np.exp(_pseudo_lognorms(size, gamma))) @ table).reshape(r.shape)
    with np.errstate(divide="ignore"):
        envelope = np.where(r > 0.0, r, 1.0) ** (gamma - 0.5) * np.exp(-0.5 * r * r)
    envelope = np.where(r > 0.0, envelope, 0.0)
    return series * envelope


def assemble_rr_matrix(basis: BasisSpec, model: InteractionModel, quad_order=None):
    """Dense symmetric matrix of the relative Hamiltonian in the given basis."""
    if basis.kind == "pseudoharmonic":
        if model.kind != "strict1d":
            raise ConfigurationError("pseudoharmonic basis pairs only with strict1d")
        return _pseudoharmonic_matrix(basis.size, basis.gamma, model.g, quad_order)
    if model.kind != "quasi1d":
        raise ConfigurationError(
            "oscillator bases pair only with quasi1d (strict-1D interaction "
            "integrals diverge in the oscillator basis)")
    parity = _parity_of(basis)
    idx = _ho_indices(basis.size, parity)
    h = np.diag(idx + 0.5).astype(np.float64)
    if model.g > 0.0:
        h += model.g * _ho_interaction(idx, model, quad_order)
    return h


def rr_trace(basis: BasisSpec, model: InteractionModel):
    """Trace of the RR matrix; for the pseudoharmonic basis the x^-2 diagonal
    is the constant 1/(gamma-1), so only the interaction diagonal needs
    quadrature."""
    if basis.kind == "pseudoharmonic":
        size, gamma = basis.size, basis.gamma
        nu = (gamma - 1.5) * (gamma - 0.5) / 2.0
        base = float(np.sum(2.0 * np.arange(size) + gamma)) - size * nu / (gamma - 1.0)
        rule = gauss_rule("genlaguerre", _pseudo_quad_order(size), alpha=gamma - 2.5)
        table = laguerre_polys(size, gamma - 1.0, np.asarray(rule.nodes))
        diag = 0.5 * np.exp(2.0 * _pseudo_lognorms(size, gamma)) * ((table * rule.weights) * table).sum(axis=1)
        return base + model.g * math.sqrt(2.0) * float(diag.sum())
    return float(np.trace(assemble_rr_matrix(basis, model)))


def optimize_gamma(model: InteractionModel, size: int) -> float:
    """Stationary point (minimum) of gamma -> Tr H^{RR}(gamma) for the
    strict-1D pseudoharmonic basis, located to ~1e-4 relative in gamma."""
    if model.kind != "strict1d":
        raise ConfigurationError("optimize_gamma: requires a strict1d model")
    if model.g <= 0.0:
        raise ConfigurationError("optimize_gamma: requires g > 0")
    if size < 1:
        raise ConfigurationError("optimize_gamma: size must be >= 1")

    def trace_at(log_gamma):
        return rr_trace(BasisSpec("pseudoharmonic", size, gamma=math.exp(log_gamma)), model)

    lo = math.log(1.51)
    hi = math.log(max(10.0, 4.0 * (3.0 * model.g) ** 0.4))
    for _ in range(4):
        log_opt = _golden_min(trace_at, lo, hi, tol=1e-6)
        if log_opt < hi - 0.01:
            break
        hi = hi + math.log(4.0)  # minimum pinned at the top: widen and retry
    else:
        raise ConvergenceError(
            f"optimize_gamma: no interior trace minimum in gamma bracket "
            f"[{math.exp(lo):.3f}, {math.exp(hi):.3f}]",
            scanned_range=(math.exp(lo), math.exp(hi)))
    gamma_opt = math.exp(log_opt)
    # second-difference sign: the stationary point must be a local minimum
    t0 = trace_at(log_opt)
    step = 5e-3
    if not (trace_at(log_opt - step) > t0 and trace_at(log_opt + step) > t0):
        raise ConvergenceError(
            f"optimize_gamma: stationary point at gamma={gamma_opt:.4f} is not a minimum",
            scanned_range=(math.exp(lo), math.exp(hi)))
    return gamma_opt


def _golden_min(f, a, b, tol):
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    c, d = b - inv_phi * (b - a), a + inv_phi * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = f(d)
    return 0.5 * (a + b)


def _lowest_pair(h):
    vals, vecs = np.linalg.eigh(h)
    c = vecs[:, 0]
    if c[np.argmax(np.abs(c))] < 0.0:
        c = -c
    return float(vals[0]), c


def ground_state(basis: BasisSpec, model: InteractionModel, parity=None) -> RelativeSolution:
    """Lowest eigenpair in the given basis, with a paired-size convergence
    certificate (energy shift under enlarging the basis).

    For the pseudoharmonic basis `parity` selects the even or odd extension
    of the half-line solution; both share the same energy.
    """
    parity = _parity_of(basis, parity)
    if parity not in ("even", "odd"):
        raise ConfigurationError(f"ground_state: bad parity {parity!r}")
    if basis.kind == "pseudoharmonic":
        step = _PSEUDO_CERT_STEP if basis.size > _PSEUDO_CERT_STEP else max(1, basis.size - 1)
        h = _pseudoharmonic_matrix(basis.size, basis.gamma, model.g)
        if model.kind != "strict1d":
            raise ConfigurationError("pseudoharmonic basis pairs only with strict1d")
        energy, coeff = _lowest_pair(h)
        small = basis.size - step
        delta = abs(np.linalg.eigvalsh(h[:small, :small])[0] - energy) if small >= 1 else math.inf
    else:
        if model.kind != "quasi1d":
            raise ConfigurationError("oscillator bases pair only with quasi1d")
        big = min(basis.size + _HO_CERT_STEP, MAX_HO_SIZE + _HO_CERT_STEP)
        idx = _ho_indices(big, parity)
        h_big = np.diag(idx + 0.5).astype(np.float64)
        if model.g > 0.0:
            h_big += model.g * _ho_interaction(idx, model)
        energy, coeff = _lowest_pair(h_big[:basis.size, :basis.size])
        delta = abs(energy - np.linalg.eigvalsh(h_big)[0])
    return RelativeSolution(
        energy=energy,
        coefficients=coeff,
        basis=basis,
        parity=parity,
        model=model,
        converged=bool(delta < CONVERGENCE_TOL),
        energy_delta=float(delta),
    )


def quasi1d_pair(g, epsilon, size):
    """Lowest even- and odd-parity solutions of the quasi-1D relative problem."""
    if size > MAX_HO_SIZE:
        raise ConfigurationError(f"quasi1d_pair: size capped at {MAX_HO_SIZE}")
    model = InteractionModel.quasi1d(g, epsilon)
    even = ground_state(BasisSpec("ho_even", size), model)
    odd = ground_state(BasisSpec("ho_odd", size), model)
    return even, odd


def strict1d_pair(g, size, gamma=None):
    """Even and odd extensions of the strict-1D half-line ground state;
    gamma=None optimizes the trace criterion first.  Both parities share
    one energy (the strict-1D spectrum is fermionized for any g > 0)."""
    model = InteractionModel.strict1d(g)
    if gamma is None:
        gamma = optimize_gamma(model, size)
    basis = BasisSpec("pseudoharmonic", size, gamma=gamma)
    even = ground_state(basis, model, parity="even")
    odd = RelativeSolution(
        energy=even.energy,
        coefficients=even.coefficients,
        basis=basis,
        parity="odd",
        model=model,
        converged=even.converged,
        energy_delta=even.energy_delta,
    )
    return even, odd
