from __future__ import annotations

from typing import Any


class LabError(Exception):
    """
    Base class for every error raised by the laboratory.
    """


class ValidationError(LabError):
    """
    Raised when an input object fails structural validation.
    """


class InvariantViolation(LabError):
    """
    Raised when a construction fails its own postcondition check.

    This always signals a bug in the library, never bad input.
    """

    def __init__(self, identity: str, detail: Any = None):
        message = f"Invariant violated: {identity}"
        if detail is not None:
            message += f" ({detail})"
        super().__init__(message)
        self.identity = identity
        self.detail = detail


class NotAPoset(ValidationError):
    def __init__(self, reason: str):
        super().__init__(f"Not a poset: {reason}")
        self.reason = reason


class NotAPartialOrder(ValidationError):
    def __init__(self, left: Any, right: Any, law: str):
        super().__init__(f"Order relation fails {law} at ({left}, {right})")
        self.pair = (left, right)
        self.law = law


class NotALattice(ValidationError):
    def __init__(self, left: Any, right: Any, operation: str):
        super().__init__(f"Elements {left} and {right} have no {operation}")
        self.pair = (left, right)
        self.operation = operation


class NotDistributive(ValidationError):
    """
    Raised with the first triple (a, b, c) where a ∧ (b ∨ c) differs from
    (a ∧ b) ∨ (a ∧ c).
    """

    def __init__(self, a: Any, b: Any, c: Any):
        super().__init__(
            f"Distributive law fails for a={a}, b={b}, c={c}: "
            "a ∧ (b ∨ c) != (a ∧ b) ∨ (a ∧ c)"
        )
        self.triple = (a, b, c)


class MixedLattices(LabError):
    def __init__(self, left: Any, right: Any):
        super().__init__(f"Elements {left!r} and {right!r} belong to different lattices")
        self.pair = (left, right)


class ComplementRequested(LabError):
    def __init__(self, element: Any):
        super().__init__(f"Element {element} is not complemented")
        self.element = element


class NotSubframe(ValidationError):
    def __init__(self, reason: str, left: Any = None, right: Any = None):
        super().__init__(f"Open elements do not form a subframe: {reason}")
        self.reason = reason
        self.pair = (left, right)


class NotComplemented(ValidationError):
    def __init__(self, element: Any):
        super().__init__(f"Open element {element} is not complemented")
        self.element = element


class NotAPartition(ValidationError):
    def __init__(self, reason: str):
        super().__init__(f"Carriers do not partition the top element: {reason}")
        self.reason = reason


class NotContinuous(ValidationError):
    def __init__(self, carrier: Any):
        super().__init__(f"Carrier {carrier} is not open")
        self.carrier = carrier


class NotClopen(ValidationError):
    def __init__(self, element: Any):
        super().__init__(f"Element {element} is not clopen")
        self.element = element


class NotIdempotent(ValidationError):
    def __init__(self, function: Any):
        super().__init__(f"Function {function} is not idempotent")
        self.function = function


class PreconditionFailed(ValidationError):
    def __init__(self, reason: str):
        super().__init__(f"Precondition failed: {reason}")
        self.reason = reason


class NotOrthogonal(ValidationError):
    def __init__(self, left: Any, right: Any):
        super().__init__(f"Functions {left} and {right} are not orthogonal")
        self.pair = (left, right)


class EDHypothesisFailed(ValidationError):
    def __init__(self, witness: Any):
        super().__init__(
            f"Frame is not extremally disconnected (witness {witness})"
        )
        self.witness = witness


class MixedTopoframes(LabError):
    def __init__(self, left: Any, right: Any):
        super().__init__(f"Functions {left} and {right} live on different topoframes")
        self.pair = (left, right)


class BoundExceeded(LabError):
    def __init__(self, requested: int, bound: int):
        super().__init__(f"Requested size {requested} exceeds the bound {bound}")
        self.requested = requested
        self.bound = bound


class DocumentSyntaxError(LabError):
    """
    Raised for malformed topoframe documents, with a 1-based source position.
    """

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class DocumentValidationError(ValidationError):
    """
    Raised when a well-formed document describes an invalid object.

    The underlying library error is chained as ``__cause__``.
    """

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
