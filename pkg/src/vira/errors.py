"""Exception hierarchy shared across the engine."""


class ViraError(Exception):
    """Base class for all engine errors."""


class DomainError(ViraError):
    """Input outside the engine's exact-arithmetic domain (zero psi values,
    incompatible module context, ...)."""


class NotSplitError(DomainError):
    """A polynomial does not factor into linear factors over the rationals."""


class ContextError(DomainError):
    """Operation applied to an element of an incompatible module context."""


class ExpressionError(ViraError):
    """Expression parse or well-formedness failure.

    Carries the byte offset of the failure and the set of token kinds that
    would have been accepted there.
    """

    def __init__(self, message, offset, expected=()):
        super().__init__(message)
        self.offset = offset
        self.expected = tuple(expected)

    def __str__(self):
        base = super().__str__()
        if self.expected:
            return f"{base} at offset {self.offset} (expected {', '.join(self.expected)})"
        return f"{base} at offset {self.offset}"


class ReductionError(ViraError):
    """The descent measure of the Whittaker-vector extraction failed to
    decrease, or the iteration cap was hit.  This flags an engine bug (the
    descent is a proved mechanism), never a property of the input."""
