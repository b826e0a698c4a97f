from lefschetz.errors import LefschetzError, ParameterError, VerificationError


class CoverError(LefschetzError):
    """Raised when a branched cover presentation cannot be replayed."""


class MoveNotApplicableError(CoverError, VerificationError):
    """Raised when a move's guard fails on the current state."""


class AuditMismatchError(CoverError, VerificationError):
    """Raised when a state's ledger disagrees with its audited invariants."""


class MoveScriptDecodeError(CoverError, ParameterError):
    """Raised when a move script cannot be read."""


class BranchClassError(CoverError, VerificationError):
    """Raised when the branch surface invariants solved from a cover are impossible."""
