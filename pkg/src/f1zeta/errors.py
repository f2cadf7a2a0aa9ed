"""Exception hierarchy shared by every module."""

from __future__ import annotations


class F1Error(Exception):
    """Base class for all library errors."""


class ResourceError(F1Error):
    """An enumeration bound was hit; the CLI maps these to exit code 5."""


class CapExceeded(ResourceError):
    pass


class SizeExceeded(ResourceError):
    pass


class SearchSpaceExceeded(ResourceError):
    pass


class NotPrime(F1Error):
    pass


class IncompatibleGluing(F1Error):
    def __init__(self, message: str, pair=None):
        super().__init__(message)
        self.pair = pair


class InvalidPrime(F1Error, ValueError):
    pass


class NumericDomain(F1Error, ArithmeticError):
    pass


class BaseMismatch(F1Error):
    pass


class NotEquivariant(F1Error):
    pass


class NotComposable(F1Error):
    pass


class OutOfTable(F1Error, KeyError):
    pass


class DSLSyntaxError(F1Error):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class SemanticError(F1Error):
    def __init__(self, name: str, reason: str):
        super().__init__(f"{name}: {reason}")
        self.name = name
        self.reason = reason
