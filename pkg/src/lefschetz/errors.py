class LefschetzError(Exception):
    """Base class for all errors."""


class ParameterError(LefschetzError):
    """Raised when parameters are outside the range where a construction is defined."""


class VerificationError(LefschetzError):
    """Raised when a machine check of an identity or an audit fails."""
