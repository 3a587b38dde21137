"""Exception hierarchy; the CLI maps each family to an exit code."""


class Lag2Error(Exception):
    """Base class for all toolkit errors."""

    exit_code = 2


class UsageError(Lag2Error):
    """Malformed command line or expression."""

    exit_code = 1


class CFSyntaxError(UsageError):
    """Continued fraction expression that does not parse."""

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        pointer = " " * position + "^"
        super().__init__(f"{message} at position {position}\n  {text}\n  {pointer}")


class DomainError(Lag2Error):
    """Mathematically invalid input."""

    exit_code = 2


class InvalidContinuedFraction(DomainError):
    """Partial quotients or period violate the representation rules."""


class NotEventuallyPeriodicError(DomainError):
    """Rational input where a quadratic irrational was required."""


class CrossFieldError(DomainError):
    """Arithmetic between surds of different quadratic fields."""

    def __init__(self, left_radicand: int, right_radicand: int):
        super().__init__(
            f"cross-field arithmetic unsupported: sqrt({left_radicand}) vs sqrt({right_radicand})"
        )


class ExtremalDirectionError(DomainError):
    """Substituted extension is not extremal in the direction the bound needs."""


class ConsistencyError(Lag2Error):
    """Internal invariant failed; signals a defect, not bad input."""

    exit_code = 3


class PrecisionLimitExceeded(ConsistencyError):
    """Enclosure refinement hit the configured cap before deciding."""

    def __init__(self, what: str, limit_bits: int):
        super().__init__(
            f"{what}: undecided at {limit_bits} bits (raise LAG2_PRECISION_LIMIT)"
        )


class InconsistentExtensionError(DomainError):
    """Substituted extension does not continue the fixed pattern word."""
