"""Exception types raised by the library."""


class WlcError(Exception):
    """Base class for all library-specific errors."""


class NotOnResonance(WlcError):
    """The supplied carrier frequency is not a cavity resonance."""


class OscillationThreshold(WlcError):
    """Round-trip amplitude gain reached unity; the steady state is undefined."""


class PeakAtEdge(WlcError):
    """A spectrum's maximum or a half-maximum crossing sits on the grid boundary."""


class NoHalfMaxCrossing(WlcError):
    """Transmission never falls below half of its maximum within the grid."""


class Infeasible(WlcError):
    """No medium parameters can satisfy the requested tuning target."""


class NoPositiveRoot(WlcError):
    """The linewidth equation has no positive real solution."""


class ParseError(WlcError):
    """Configuration text could not be parsed."""


class ValidationError(WlcError):
    """Configuration parsed but violates a constraint."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


class TableIoError(WlcError):
    """Reading or writing a data table failed."""
