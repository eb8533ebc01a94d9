"""PID truncation - truncated multivariate information from partial information decomposition."""

__version__ = "0.1.0"
