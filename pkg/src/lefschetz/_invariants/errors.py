from lefschetz.errors import LefschetzError, ParameterError, VerificationError


class InvariantError(LefschetzError):
    """Raised when an invariant cannot be computed."""


class MissingHomologyError(InvariantError, ParameterError):
    """Raised when a letter's curve has no homology class."""


class MissingAnnotationError(InvariantError, ParameterError):
    """Raised when a letter is not annotated as separating or nonseparating."""


class NonIntegralSignatureError(InvariantError, VerificationError):
    """Raised when a signature formula evaluates to a non-integer."""


class NonRelatorError(InvariantError, ParameterError):
    """Raised when a word that should map to the identity does not."""


class SpinHypothesisError(InvariantError, ParameterError):
    """Raised when the spin criterion is asked about a case it does not cover."""


class InvariantParameterError(InvariantError, ParameterError):
    """Raised when base points, family or doubling parameters are out of range."""


class RokhlinError(InvariantError, VerificationError):
    """Raised when a spin manifold's signature is not divisible by 16."""


class CalibrationError(InvariantError, VerificationError):
    """Raised when no sign convention reproduces the anchor signatures."""


class ClassificationMismatchError(InvariantError, VerificationError):
    """Raised when a fiber-sum classification disagrees with the closed forms."""


class SpinMismatchError(InvariantError, VerificationError):
    """Raised when the parity criterion and the fiber-sum spin rule disagree."""


class InvariantAuditError(InvariantError, VerificationError):
    """Raised when a word-level audit of an invariant record fails."""
