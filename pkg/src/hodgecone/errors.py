class HodgeconeError(Exception):
    """Base class for all package errors."""


class SpectralDataError(HodgeconeError, ValueError):
    """Malformed or inconsistent cross-section data."""


class InsufficientTruncation(HodgeconeError, ValueError):
    """The supplied spectra are not complete far enough for the request."""


class GuardViolation(HodgeconeError, ValueError):
    """A closed-form shortcut was requested outside its guard."""


class HypothesisFailure(HodgeconeError):
    """A standing hypothesis of the theory fails for this input."""


class BesselRangeError(HodgeconeError, ArithmeticError):
    """Bessel evaluation outside the supported or representable range."""


class LedgerError(HodgeconeError, ValueError):
    """Incomplete or inconsistent degeneration ledger."""
