"""Exception taxonomy.

Domain errors (bad mathematical input), search exhaustion, and malformed
serialized input are distinct failure modes; the CLI maps them to exit codes
1, 2 and 3 respectively.
"""


class CurveLabError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(CurveLabError):
    """Input is well-formed but violates a mathematical precondition."""


class InvalidGenusError(DomainError):
    pass


class InvalidVertexError(DomainError):
    """A graph/path vertex fails its requirement (e.g. separating curve
    where a non-separating one is required)."""


class MalformedInputError(CurveLabError):
    """Serialized input cannot be parsed into a valid object."""


class MalformedCurveError(MalformedInputError):
    """Raw curve data does not encode a closed transverse 1-manifold."""


class SearchExhausted(CurveLabError):
    """A bounded deterministic search used up its budget.

    Never a proof of nonexistence; callers may retry with a larger budget.
    """

    def __init__(self, message, budget=None):
        super().__init__(message)
        self.budget = budget
