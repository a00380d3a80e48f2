"""
Exception hierarchy for the planner; each error carries its CLI exit code.
"""
from typing import Any, Dict, Optional

from ..config.constants import EXIT_CAP_EXCEEDED, EXIT_NOT_CAT0, EXIT_VALIDATION


class CubePlanError(Exception):
    """Base class for all planner errors."""

    exit_code: int = 1

    def to_dict(self) -> Dict[str, Any]:
        """Structured form printed by the command line on failure."""
        return {
            "error": self.__class__.__name__,
            "message": str(self),
            "exit_code": self.exit_code,
        }


class ValidationError(CubePlanError):
    """Malformed or inconsistent input."""

    exit_code = EXIT_VALIDATION


class PipError(ValidationError):
    """A poset with inconsistent pairs, or an ideal of one, is invalid."""


class StateError(ValidationError):
    """A robot or system state is invalid."""


class PlanError(ValidationError):
    """A plan cannot be built or does not replay."""


class SeriesMismatchError(ValidationError):
    """Two independent cube counts disagree."""


class CapExceededError(CubePlanError):
    """A configured size cap would be exceeded."""

    exit_code = EXIT_CAP_EXCEEDED

    def __init__(self, what: str, cap: int):
        super().__init__(f"{what} exceeds the configured cap of {cap}")
        self.what = what
        self.cap = cap


class NotCat0Error(CubePlanError):
    """The state complex of a system is not CAT(0)."""

    exit_code = EXIT_NOT_CAT0

    def __init__(self, report: Optional[Any] = None, message: Optional[str] = None):
        super().__init__(message or (report.describe() if report is not None else "complex is not CAT(0)"))
        self.report = report
