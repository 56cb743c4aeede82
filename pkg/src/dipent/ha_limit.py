"""Closed-form strong-coupling asymptotics from the harmonic approximation.

Expanding the relative potential x^2/2 + g sqrt(2)/x^3 about its minimum
x_c = 2^{1/10} (3g)^{1/5} gives curvature exactly 5, hence oscillator
frequency sqrt(5) and Gaussian width parameter w = 5^{1/4}.  A bilinear
Gaussian-Hermite expansion of the resulting pair wavefunction yields
geometric Schmidt coefficients k_l = sqrt((1-z^2)/2) z^l with
z = (w-1)/(w+1), from which occupancies, Renyi and von Neumann entropies
follow in closed form.
"""
import math
from dataclasses import dataclass

import numpy as np

from ._backend import hermite_functions
from .errors import ConfigurationError

W = 5.0 ** 0.25
Z = (W - 1.0) / (W + 1.0)
C_INF = 5.0 ** 0.125 / (math.sqrt(2.0) * math.pi ** 0.25)
MAX_ORBITAL = 60


@dataclass(frozen=True)
class HAQuantities:
    """Width parameter w = 5^{1/4} and Schmidt ratio z = (w-1)/(w+1)."""

    w: float = W
    z: float = Z

    def x_c(self, g):
        return classical_separation(g)


def classical_separation(g):
    """Minimum x_c of the strict-1D relative potential: x_c^5 = 3 sqrt(2) g."""
    if g <= 0.0:
        raise ConfigurationError("classical_separation: g must be > 0")
    return 2.0 ** 0.1 * (3.0 * g) ** 0.2


def ha_energy(g):
    """Harmonic estimate of the relative ground energy:
    V(x_c) + sqrt(5)/2 (the curvature at x_c is exactly 5 for every g)."""
    xc = classical_separation(g)
    return 0.5 * xc * xc + g * math.sqrt(2.0) / xc ** 3 + 0.5 * math.sqrt(5.0)


def ha_relative_wavefunction(g, parity, x):
    """Symmetric (+) / antisymmetric (-) double-Gaussian approximation to the
    lowest relative wavefunctions, exactly normalized including the overlap
    cross-term (the large-g limit of the normalization is C_INF)."""
    if parity not in ("even", "odd"):
        raise ConfigurationError(f"ha_relative_wavefunction: bad parity {parity!r}")
    xc = classical_separation(g)
    sign = 1.0 if parity == "even" else -1.0
    overlap = math.exp(-math.sqrt(5.0) * xc * xc)
    norm = C_INF / math.sqrt(1.0 + sign * overlap)
    x = np.asarray(x, dtype=np.float64)
    half = 0.5 * math.sqrt(5.0)
    return norm * (np.exp(-half * (x - xc) ** 2) + sign * np.exp(-half * (x + xc) ** 2))


def schmidt_coefficient(l):
    """k_l = sqrt((1-z^2)/2) z^l; 2 sum k_l^2 = 1 in closed form."""
    l = np.asarray(l)
    if np.any(l < 0):
        raise ConfigurationError("schmidt_coefficient: l must be >= 0")
    return math.sqrt(0.5 * (1.0 - Z * Z)) * Z ** l


def natural_orbital(l, x, side="left", g=None):
    """Asymptotic natural orbital: the width-w oscillator eigenfunction
    v_l translated to the left/right density hump at -/+ x_c/sqrt2."""
    if l < 0 or l > MAX_ORBITAL:
        raise ConfigurationError(f"natural_orbital: l must be in [0, {MAX_ORBITAL}]")
    if side not in ("left", "right"):
        raise ConfigurationError(f"natural_orbital: bad side {side!r}")
    shift = 0.0
    if g is not None:
        shift = classical_separation(g) / math.sqrt(2.0)
        if side == "left":
            shift = -shift
    x = np.asarray(x, dtype=np.float64)
    arg = math.sqrt(W) * (x - shift)
    return W ** 0.25 * hermite_functions(l + 1, arg.ravel())[l].reshape(x.shape)


def mehler_reconstruction(x1, x2, terms):
    """Partial sum sum_{l<terms} k_l v_l(x1) v_l(x2); converges geometrically
    (ratio z^2) to the x_c-independent pair Gaussian
    C_INF/pi^{1/4} exp(-(sqrt5 (x2-x1)^2 + (x1+x2)^2)/4)."""
    if terms < 1:
        raise ConfigurationError("mehler_reconstruction: terms must be >= 1")
    x1 = np.asarray(x1, dtype=np.float64)
    x2 = np.asarray(x2, dtype=np.float64)
    x1b, x2b = np.broadcast_arrays(x1, x2)
    shape = x1b.shape
    pts = np.concatenate([x1b.ravel(), x2b.ravel()])
    table = W ** 0.25 * hermite_functions(terms, math.sqrt(W) * pts)
    m = x1b.size
    k = schmidt_coefficient(np.arange(terms))
    out = np.einsum("l,lm,lm->m", k, table[:, :m], table[:, m:])
    return float(out[0]) if shape == () else out.reshape(shape)


def ha_pair_gaussian(x1, x2):
    """Closed form the Mehler series converges to (large-g normalization)."""
    x1 = np.asarray(x1, dtype=np.float64)
    x2 = np.asarray(x2, dtype=np.float64)
    return (C_INF / math.pi ** 0.25
            * np.exp(-0.25 * (math.sqrt(5.0) * (x2 - x1) ** 2 + (x1 + x2) ** 2)))


def ha_renyi(q):
    """Order-q Renyi entropy of the asymptotic (doubly degenerate) spectrum:
    log2(2^{1-q} (1-z^2)^q / (1-z^{2q})) / (1-q)."""
    if q <= 0.0:
        raise ConfigurationError("ha_renyi: q must be > 0")
    if q == 1.0:
        raise ConfigurationError("ha_renyi: q=1 is the von Neumann limit; use ha_vn")
    z2 = Z * Z
    return (math.log2(2.0 ** (1.0 - q) * (1.0 - z2) ** q / (1.0 - z2 ** q))) / (1.0 - q)


def ha_vn(statistics="boson"):
    """Asymptotic von Neumann entropy: z^2/(z^2-1) log2 z^2 - log2(1-z^2) + 1
    for bosons; exactly one less for fermions (shared occupancy set)."""
    z2 = Z * Z
    s_boson = z2 / (z2 - 1.0) * math.log2(z2) - math.log2(1.0 - z2) + 1.0
    if statistics == "boson":
        return s_boson
    if statistics == "fermion":
        return s_boson - 1.0
    raise ConfigurationError(f"ha_vn: bad statistics {statistics!r}")
