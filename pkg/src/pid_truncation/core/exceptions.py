"""Custom exceptions for pid_truncation."""


class PidTruncationError(Exception):
    """Base exception for all errors in the application."""
    pass


class ConfigurationError(PidTruncationError):
    """Raised when there is a configuration error."""
    pass


class ArgumentError(PidTruncationError, ValueError):
    """Raised when an operation is called with invalid arguments."""
    pass


class InputFormatError(ArgumentError):
    """Raised when an input file cannot be parsed."""
    pass


class DomainError(PidTruncationError, ArithmeticError):
    """Raised when a quantity is undefined for the given input.

    The offending value is kept on ``value``.
    """

    def __init__(self, message: str, value=None):
        super().__init__(message)
        self.value = value


class ExperimentError(PidTruncationError):
    """Raised when an experiment cannot be created or run."""
    pass
