"""Exception types shared across the package."""


class InputError(ValueError):
    """An argument violates a documented precondition."""


class CapacityError(InputError):
    """An input exceeds a documented size limit."""


class HypothesisError(InputError):
    """A graph fails a theorem hypothesis (wrong parity, too small, disconnected)."""

    def __init__(self, reason: str, message: str | None = None):
        super().__init__(message or reason)
        self.reason = reason


class Graph6ParseError(ValueError):
    """A graph6 line is malformed; carries the byte offset of the problem."""

    def __init__(self, message: str, offset: int | None = None):
        super().__init__(message)
        self.offset = offset


class NumericalError(RuntimeError):
    """A numeric routine could not certify its result."""


class SamplingError(RuntimeError):
    """Rejection sampling exhausted its attempt budget."""
