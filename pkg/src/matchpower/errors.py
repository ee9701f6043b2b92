"""Exception types shared across the package."""


class MatchPowerError(Exception):
    """Base class for all package-specific errors."""


class InvalidParameterError(MatchPowerError, ValueError):
    """An argument violates a documented precondition."""


class EdgeListParseError(MatchPowerError, ValueError):
    """Malformed edge-list text; carries the offending line number."""

    def __init__(self, message, line_no):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class CapExceededError(MatchPowerError):
    """Input is larger than a declared practical limit."""


class ConsistencyCheckError(MatchPowerError):
    """An internal cross-check failed (boundary composition, Euler count,

    or disagreement between independent computation routes)."""
