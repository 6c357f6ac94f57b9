"""Errors raised while reading CLI input."""

from __future__ import annotations

from ..errors import HVError


class ConfigError(HVError, ValueError):
    """Raised for a malformed run configuration, grid file or command line."""


class ExpressionParseError(HVError, ValueError):
    """Raised for an expression that is not a Lie element or PBW vector.

    ``line`` and ``column`` are 1-based and point at the offending character.
    """

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
