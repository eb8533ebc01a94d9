"""Core infrastructure: configuration, exceptions, observability."""
