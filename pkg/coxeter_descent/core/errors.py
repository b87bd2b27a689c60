from __future__ import annotations

from typing import Any, Optional


class CoxeterError(Exception):
    pass


class ConstructionError(CoxeterError, ValueError):
    pass


class GeneratorIndexError(CoxeterError, IndexError):
    pass


class SubsetError(CoxeterError, ValueError):
    pass


class MixedSystemError(CoxeterError, ValueError):
    pass


class EnumerationCapError(CoxeterError):
    def __init__(self, what: str, requested: int, cap: int) -> None:
        super().__init__(
            f"Refusing to enumerate {what}: {requested} elements exceed the enumeration cap {cap}"
        )
        self.what = what
        self.requested = requested
        self.cap = cap


class TransversalFactorizationError(CoxeterError):
    def __init__(self, message: str, element: Optional[Any] = None) -> None:
        super().__init__(message)
        self.element = element


class ClassificationMismatch(CoxeterError):
    pass
