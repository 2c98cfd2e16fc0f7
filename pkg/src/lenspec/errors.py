"""Exception hierarchy shared by all lenspec modules."""

from __future__ import annotations


class LenspecError(Exception):
    """Base class for all lenspec errors."""


class DomainError(LenspecError, ValueError):
    """A precondition on an operation's inputs was violated."""


class UnsupportedError(DomainError):
    """The inputs are valid but fall outside the supported computation range."""


class PrecisionError(DomainError):
    """Interval widths are too large for the requested decision; retry at
    higher precision."""
