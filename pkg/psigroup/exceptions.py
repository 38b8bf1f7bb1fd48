# psigroup/exceptions.py
from typing import Optional


class PsiGroupError(Exception):
    """Base class for every error raised by psigroup."""


class InvalidParameters(PsiGroupError, ValueError):
    """A numeric argument or family parameter is outside its domain."""


class CapExceeded(PsiGroupError):
    """A closure or search grew past its configured cap."""

    def __init__(self, message: str, cap: Optional[int] = None):
        super().__init__(message)
        self.cap = cap


class OrderCapExceeded(CapExceeded):
    """Isomorphism testing requested above the order cap."""


class ForeignElementError(PsiGroupError, ValueError):
    """An element or subgroup does not belong to the parent group."""


class NotNormalError(PsiGroupError, ValueError):
    """A quotient was requested by a subgroup that is not normal."""


class PreconditionFailed(PsiGroupError, ValueError):
    """The hypotheses of a check are not met by the given group."""


class ParseError(PsiGroupError, ValueError):
    """A corpus file could not be parsed."""

    def __init__(self, message: str, line: Optional[int] = None, field: Optional[str] = None):
        location = []
        if line is not None:
            location.append(f"line {line}")
        if field:
            location.append(f"field '{field}'")
        prefix = f"{', '.join(location)}: " if location else ""
        super().__init__(f"{prefix}{message}")
        self.line = line
        self.field = field


class UnknownTheorem(PsiGroupError, KeyError):
    """No runner is registered under the requested theorem identifier."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown theorem"
