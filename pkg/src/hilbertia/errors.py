"""Exception types raised across the package.

Every domain error derives from :class:`AlgebraError` (itself a ``ValueError``)
so the CLI can map all of them to exit code 1 in one place.
"""

from __future__ import annotations


class AlgebraError(ValueError):
    """Base class for domain errors."""


class ZeroPolynomialError(AlgebraError):
    pass


class NotMonicError(AlgebraError):
    pass


class VariableCountError(AlgebraError):
    pass


class DegreeError(AlgebraError):
    """Raised when an operation needs a positive (or bounded) degree."""


class DegreeBoundError(DegreeError):
    """The instance exceeds a desk-scale degree bound; reduce it and retry."""


class NotRegularError(AlgebraError):
    pass


class NotIrreducibleError(AlgebraError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotSquarefreeError(AlgebraError):
    pass


class BudgetExhaustedError(AlgebraError):
    def __init__(self, message: str, diagnostics: dict | None = None):
        super().__init__(message)
        self.diagnostics = dict(diagnostics or {})


class PolySyntaxError(AlgebraError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset
