"""Exception hierarchy shared by the library and the CLI."""


class HurwitzError(Exception):
    """Base class for all library errors."""

    exit_code = 1


class ParseError(HurwitzError, ValueError):
    """Malformed cycle notation, braid word, JSON document or group name."""

    exit_code = 2


class InvalidDatum(HurwitzError, ValueError):
    """A tuple that violates one of the n-datum conditions.

    ``condition`` is one of ``"length"``, ``"membership"``, ``"product"``,
    ``"nontrivial"`` or ``"generation"``.
    """

    exit_code = 2

    def __init__(self, condition, message):
        super().__init__(message)
        self.condition = condition


class CapExceeded(HurwitzError, RuntimeError):
    """A configured size limit was hit (group order, orbit size, enumeration)."""

    exit_code = 3

    def __init__(self, what, limit, reached=None):
        msg = f"{what} exceeds cap {limit}"
        if reached is not None:
            msg += f" (stopped at {reached})"
        super().__init__(msg)
        self.what = what
        self.limit = limit
        self.reached = reached


class HypothesisViolation(HurwitzError):
    """An operation was called on input outside its mathematical hypothesis."""

    exit_code = 4
