"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from models import VerificationReport


class AlgebraError(Exception):
    """Base exception for all library errors."""


class DimensionError(AlgebraError):
    """Shapes or dimensions do not line up."""


class UnknownOperationError(AlgebraError):
    """An operation name is not defined on the algebra."""

    def __init__(self, name: str, available: list[str] | tuple[str, ...] = ()):
        self.name = name
        hint = f" (available: {', '.join(available)})" if available else ""
        super().__init__(f"Unknown operation '{name}'{hint}")


class UnknownKindError(AlgebraError):
    """A structure class tag is not supported."""


class ArityError(AlgebraError):
    """The algebra's operations do not match the arity the caller needs."""


class SingularError(AlgebraError):
    """A map or form that must be invertible is not."""


class PreconditionError(AlgebraError):
    """A construction's mathematical precondition failed.

    Carries the failing report so callers can show the witnesses.
    """

    def __init__(self, message: str, report: VerificationReport | None = None):
        self.report = report
        if report is not None and report.failures:
            message = f"{message}: {report.failures[0].describe()}"
        super().__init__(message)


class SearchCapError(AlgebraError):
    """An exhaustive search would exceed the configured cap."""

    def __init__(self, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"Search space has {size} candidates, above the cap of {cap}")


class FormatError(AlgebraError):
    """An algebra file is malformed."""

    def __init__(self, errors: list[str] | str, source: str = ""):
        self.source = source
        prefix = f"{source}: " if source else ""
        if isinstance(errors, list):
            self.errors = errors
            super().__init__(prefix + "; ".join(errors))
        else:
            self.errors = [errors]
            super().__init__(prefix + errors)
