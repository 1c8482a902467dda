from typing import Dict, Optional


class InstkitError(Exception):
    def __init__(self, message: str, details: Optional[Dict] = None):
        self.message = message
        self.details = details or {}
        super().__init__(message)


class NotComposable(InstkitError):
    pass


class DomainMismatch(InstkitError):
    pass


class UnknownSignature(InstkitError):
    pass


class SentenceOutOfUniverse(InstkitError):
    pass


class ModelOutOfUniverse(InstkitError):
    pass


class InvalidStructure(InstkitError):
    """Raised when a construction's precondition check produced violations."""

    def __init__(self, message: str, report=None):
        super().__init__(message, {"report": report})
        self.report = report


class InvalidComorphism(InvalidStructure):
    pass


class ParseError(InstkitError):
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        super().__init__(message, {"line": line, "column": column})
        self.line = line
        self.column = column

    def __str__(self) -> str:
        if self.line is None:
            return self.message
        return f"{self.message} (line {self.line}, column {self.column})"


class DanglingReference(InstkitError):
    pass


class FormulaSyntaxError(InstkitError):
    def __init__(self, message: str, position: int):
        super().__init__(message, {"position": position})
        self.position = position

    def __str__(self) -> str:
        return f"{self.message} at position {self.position}"


class UnknownSymbol(InstkitError):
    pass


class ArityMismatch(InstkitError):
    pass


class UnassignedVariable(InstkitError):
    pass


class MissingMapping(InstkitError):
    pass


class DepthOverflow(InstkitError):
    pass


class InvalidLogicMorphism(InvalidStructure):
    pass


class NotASubcategory(InstkitError):
    pass


class ResourceBoundExceeded(InstkitError):
    def __init__(self, message: str, size: int, bound: int):
        super().__init__(message, {"size": size, "bound": bound})
        self.size = size
        self.bound = bound


class UniverseTooLarge(ResourceBoundExceeded):
    pass


class SearchSpaceTooLarge(ResourceBoundExceeded):
    pass


class ExplosionGuard(ResourceBoundExceeded):
    pass
