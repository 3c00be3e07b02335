class NeighborhoodPrimeError(Exception):
    """Base class for every error raised by nprimelabel."""


class UsageError(NeighborhoodPrimeError, ValueError):
    pass


class ParseError(UsageError):
    def __init__(self, line_number, message):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class LabelingInvalid(NeighborhoodPrimeError):
    pass


class InvalidSpec(NeighborhoodPrimeError):
    pass


class UnsupportedParameters(NeighborhoodPrimeError):
    pass


class UnsupportedStructure(NeighborhoodPrimeError):
    pass


class PreconditionViolated(NeighborhoodPrimeError):
    pass


class InvariantViolation(NeighborhoodPrimeError, AssertionError):
    """A result that must exist by construction could not be produced."""
