"""Exception hierarchy shared by every module."""

from __future__ import annotations


class OpetriError(ValueError):
    """Base class for all errors raised by this package."""


class ValidationError(OpetriError):
    """A value violates one of the data-model invariants."""

    def __init__(self, message: str, path: str | None = None):
        self.path = path
        if path:
            message = f"{path}: {message}"
        super().__init__(message)


class LegCodomainMismatch(ValidationError):
    pass


class MultisetLengthMismatch(ValidationError):
    pass


class MapOutOfRange(ValidationError):
    pass


class IndexOutOfRange(OpetriError, IndexError):
    pass


class EmptyPairRejected(ValidationError):
    pass


class FootMismatch(OpetriError):
    pass


class NotMope(OpetriError):
    pass


class HorizonExceeded(OpetriError):
    pass


class AzConditionViolated(OpetriError):
    pass


class NotMonotone(OpetriError):
    pass


class InfeasibleBounds(OpetriError):
    pass


class SchemaError(ValidationError):
    pass
