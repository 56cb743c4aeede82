"""Exception hierarchy shared by all dipent modules.

The CLI maps these onto exit codes: configuration errors -> 2,
convergence failures -> 3, numerical-quality failures -> 4.
"""


class DipentError(Exception):
    """Base class for all dipent errors."""


class ConfigurationError(DipentError):
    """Invalid parameters, basis/model pairing, or CLI flag combination."""


class GridTooSmallError(ConfigurationError):
    """Wavefunction tail does not fit on the requested grid."""

    def __init__(self, message, required_half_width=None):
        super().__init__(message)
        self.required_half_width = required_half_width


class ConvergenceError(DipentError):
    """An iterative search failed (e.g. no stationary point in bracket)."""

    def __init__(self, message, scanned_range=None):
        super().__init__(message)
        self.scanned_range = scanned_range


class NumericalQualityError(DipentError):
    """A result violates an internal consistency check (e.g. fermionic
    occupancies fail to pair up, signalling an under-resolved grid)."""
