from lefschetz.errors import LefschetzError, ParameterError, VerificationError


class BraidError(LefschetzError):
    """Raised when a braid word or braid operation is invalid."""


class StrandMismatchError(BraidError, ParameterError):
    """Raised when braids on different numbers of strands are combined."""


class GeneratorRangeError(BraidError, ParameterError):
    """Raised when a generator index or block size is outside 1..n-1."""


class StrandSubsetError(BraidError, ParameterError):
    """Raised when a strand subset is empty or refers to missing strands."""


class HurwitzPositionError(BraidError, ParameterError):
    """Raised when a Hurwitz move position is outside the factorization."""


class ConventionSearchError(BraidError, VerificationError):
    """Raised when no block-pass convention satisfies the master identity."""
