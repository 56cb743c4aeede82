"""Quasi-1D effective dipolar interaction, its strict-1D limit, and the
physical-to-dimensionless coupling conversion.

The transverse-averaged potential in trap units is

    u_effective(x, eps) = eps^{3/2} [ sqrt(2 pi)(1 + eps x^2) erfcx(sqrt(eps/2) x)
                                      - 2 sqrt(eps) x ],

positive, monotone decreasing from sqrt(2 pi) eps^{3/2} at contact to the
dipolar tail 4/x^3 (so that u_effective(sqrt(2)|x|) -> sqrt(2)/|x|^3, the
strict-1D relative-coordinate form).  The bracket cancels to O(x^-3) at
large argument, so past sqrt(eps/2) x = 6 it is evaluated through the
asymptotic series of the difference instead of erfcx directly.
"""
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigurationError
from .numerics import erfcx

SQRT_2PI = math.sqrt(2.0 * math.pi)
_SWITCH = 6.0  # branch point in s = sqrt(eps/2) x
_TAIL_TERMS = 18


@dataclass(frozen=True)
class PhysicalParams:
    """Trap and dipole parameters: mass, axial/transverse frequencies,
    dipole strength d^2, tilt angle theta (radians), and hbar."""

    m: float
    omega: float
    omega_perp: float
    d2: float
    theta: float
    hbar: float = 1.0

    def __post_init__(self):
        for name in ("m", "omega", "omega_perp", "hbar"):
            if getattr(self, name) <= 0.0:
                raise ConfigurationError(f"PhysicalParams: {name} must be positive")
        if self.d2 < 0.0:
            raise ConfigurationError("PhysicalParams: d2 must be >= 0")
        if self.omega_perp / self.omega < 1.0:
            raise ConfigurationError("PhysicalParams: anisotropy omega_perp/omega must be >= 1")

    @property
    def epsilon(self):
        return self.omega_perp / self.omega


@dataclass(frozen=True)
class InteractionModel:
    """Interaction kind ("quasi1d" with anisotropy epsilon, or "strict1d")
    plus the dimensionless repulsive coupling g >= 0."""

    kind: str
    g: float
    epsilon: float | None = None

    def __post_init__(self):
        if self.kind not in ("quasi1d", "strict1d"):
            raise ConfigurationError(f"InteractionModel: unknown kind {self.kind!r}")
        if self.g < 0.0:
            raise ConfigurationError(
                "InteractionModel: g must be >= 0 (attractive couplings have no "
                "ground state without a short-range contact term)")
        if self.kind == "quasi1d":
            if self.epsilon is None or self.epsilon < 1.0:
                raise ConfigurationError("InteractionModel: quasi1d requires epsilon >= 1")
        elif self.epsilon is not None:
            raise ConfigurationError("InteractionModel: strict1d takes no epsilon")

    @classmethod
    def quasi1d(cls, g, epsilon):
        return cls(kind="quasi1d", g=float(g), epsilon=float(epsilon))

    @classmethod
    def strict1d(cls, g):
        return cls(kind="strict1d", g=float(g))


def physical_to_g(p: PhysicalParams) -> float:
    """Dimensionless coupling g = d^2 sqrt(omega) m^{3/2} (1 + 3 cos 2theta) / (8 hbar^{5/2}).

    May be negative for tilt angles past the magic angle; solver modules
    reject negative couplings.
    """
    return (p.d2 * math.sqrt(p.omega) * p.m ** 1.5
            * (1.0 + 3.0 * math.cos(2.0 * p.theta)) / (8.0 * p.hbar ** 2.5))


def _tail_bracket(u2):
    """Asymptotic series of sqrt(2pi)(1+u^2)erfcx(u/sqrt(2)) - 2u in u^2 = eps x^2:
    4 u^{-3} [1 - 6 u^{-2} + 45 u^{-4} - 420 u^{-6} + ...]."""
    term = 1.0 / (u2 * np.sqrt(u2))
    acc = term.copy()
    coef = 1.0
    for k in range(2, _TAIL_TERMS + 1):
        coef *= -(2.0 * k - 1.0) * k / (k - 1.0)
        term = term / u2
        acc = acc + coef * term
    return 4.0 * acc


def u_effective(x, epsilon):
    """Bare quasi-1D effective potential at separation x >= 0, anisotropy eps >= 1.

    Vectorized over x.  Stable for all eps x^2 (asymptotic branch past
    sqrt(eps/2) x = 6); relative branch mismatch in the crossover window
    is below 1e-9.
    """
    if epsilon < 1.0:
        raise ConfigurationError("u_effective: epsilon must be >= 1")
    scalar = np.isscalar(x)
    x = np.atleast_1d(np.asarray(x, dtype=np.float64))
    if np.any(x < 0.0):
        raise ConfigurationError("u_effective: x must be >= 0 (pass |separation|)")
    s = math.sqrt(epsilon / 2.0) * x
    out = np.empty_like(x)
    direct = s <= _SWITCH
    xd = x[direct]
    out[direct] = (SQRT_2PI * (1.0 + epsilon * xd * xd) * erfcx(math.sqrt(epsilon / 2.0) * xd)
                   - 2.0 * math.sqrt(epsilon) * xd)
    if not direct.all():
        u2 = epsilon * x[~direct] ** 2
        out[~direct] = _tail_bracket(u2)
    out *= epsilon ** 1.5
    return float(out[0]) if scalar else out


def u_interaction(x1, x2, model: InteractionModel):
    """Pair interaction energy between particles at lab coordinates x1, x2.

    quasi1d: g * u_effective(|x2-x1|, eps); strict1d: g sqrt(2) |x_rel|^{-3}
    with x_rel = (x2-x1)/sqrt(2), returning +inf at contact.
    """
    sep = abs(x2 - x1)
    if model.kind == "quasi1d":
        return model.g * u_effective(sep, model.epsilon)
    if sep == 0.0:
        return math.inf
    x_rel = sep / math.sqrt(2.0)
    return model.g * math.sqrt(2.0) / x_rel ** 3


def relative_potential(x_rel, model: InteractionModel):
    """Interaction term of the relative-motion Hamiltonian at relative
    coordinate x_rel (vectorized): g U(sqrt(2)|x|) or g sqrt(2)/|x|^3."""
    x_rel = np.asarray(x_rel, dtype=np.float64)
    if model.kind == "quasi1d":
        return model.g * u_effective(np.sqrt(2.0) * np.abs(x_rel), model.epsilon)
    with np.errstate(divide="ignore"):
        return model.g * math.sqrt(2.0) / np.abs(x_rel) ** 3
