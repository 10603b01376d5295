"""Shared exception types.

Every error carries a short machine-readable ``code`` so the CLI can emit
``error[<code>]: message`` uniformly.
"""


class ChernRepError(Exception):
    code = "error"


class RankMismatchError(ChernRepError):
    code = "rank-mismatch"


class EnumerationLimitError(ChernRepError):
    """Raised when a full Weyl-group enumeration would exceed the guard."""

    code = "enumeration-limit"


class ModelSizeError(ChernRepError):
    code = "model-size"


class AugmentationError(ChernRepError):
    code = "augmentation"


class FiltrationCapError(ChernRepError):
    code = "cap-exceeded"


class InvarianceError(ChernRepError):
    code = "not-invariant"


class NoCanonicalGeneratorsError(ChernRepError):
    code = "no-generators"


class ReductionDefectError(ChernRepError):
    """Internal invariant of a rewriting or subspace routine was violated."""

    code = "defect"


class ParseError(ChernRepError):
    code = "parse"

    def __init__(self, message, pos=None):
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)
        self.pos = pos
