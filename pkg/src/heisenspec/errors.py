"""Exception types and size guards shared by every module."""

from __future__ import annotations

import os

DEFAULT_CAP = 4096
CAP_ENV = "HEISENSPEC_CAP"


class HeisenspecError(Exception):
    """Base class for all library errors."""


class ParseError(HeisenspecError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GraphValidationError(HeisenspecError, ValueError):
    pass


class SizeCapError(HeisenspecError):
    """A dense object would exceed the configured desk-scale limit."""


class ConvergenceError(HeisenspecError):
    def __init__(self, message: str, residual: float):
        self.residual = residual
        super().__init__(f"{message} (residual {residual:.3e})")


class NotApplicableError(HeisenspecError):
    """A bound's hypotheses fail; carries the reason instead of a number."""


def size_cap() -> int:
    """Dense dimension limit; ``HEISENSPEC_CAP`` overrides the default."""
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise HeisenspecError(f"{CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise HeisenspecError(f"{CAP_ENV} must be positive, got {cap}")
    return cap


def check_size(dim: int, what: str, cap: int | None = None) -> None:
    limit = size_cap() if cap is None else cap
    if dim > limit:
        raise SizeCapError(f"{what} has dimension {dim}, above the cap of {limit}")
