from lefschetz.errors import LefschetzError, ParameterError, VerificationError


class FactorizationError(LefschetzError):
    """Raised when a Dehn-twist factorization is malformed."""


class PencilParameterError(FactorizationError, ParameterError):
    """Raised when (g, h, i) lies outside the range where the pencil is defined."""


class CurveDataError(FactorizationError, ParameterError):
    """Raised when a curve's data is inconsistent with its ambient surface."""


class AmbientMismatchError(FactorizationError, ParameterError):
    """Raised when factorizations on different surfaces are combined."""


class SubwordMismatchError(FactorizationError, ParameterError):
    """Raised when a surgery is applied where its subword does not occur."""


class PairingError(FactorizationError, VerificationError):
    """Raised when a block loop appears without its partner on the other sheet."""


class MissingDownstairsImageError(FactorizationError, VerificationError):
    """Raised when a letter has no image in the braid group."""


class RelationParameterError(FactorizationError, ParameterError):
    """Raised when a relator is requested for an unsupported genus or exponent."""


class FactorizationDecodeError(FactorizationError, ParameterError):
    """Raised when factorization JSON cannot be decoded."""
