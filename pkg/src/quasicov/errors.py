"""Shared exception types."""


class ResourceLimitError(RuntimeError):
    """A computation would exceed a configured resource cap."""
