"""Exception taxonomy shared by the library and the CLI exit codes."""


class DomainError(ValueError):
    """An input violates an operation's precondition."""


class ParseError(DomainError):
    """Malformed graph or list file. Carries the offending line number."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class BudgetError(RuntimeError):
    """An exhaustive search would exceed its configured size or time cap."""


class InvariantViolation(AssertionError):
    """A structural guarantee failed to hold. Always indicates a bug."""
