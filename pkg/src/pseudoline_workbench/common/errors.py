"""
Exception hierarchy for the workbench.

Everything the operations reject as bad input derives from
WorkbenchInputError, which is also a ValueError so callers that only know
the builtin keep working. The CLI turns these into exit code 2.
"""

from typing import Optional


class WorkbenchError(Exception):
    """Base class for all workbench errors."""


class WorkbenchInputError(WorkbenchError, ValueError):
    """Input rejected by an operation."""


class ParseError(WorkbenchInputError):
    """A data file could not be parsed."""

    def __init__(self, message: str, path: Optional[str] = None, line: Optional[int] = None):
        self.path = path
        self.line = line
        self.detail = message
        location = path or "<input>"
        if line is not None:
            location = f"{location}:{line}"
        super().__init__(f"{location}: {message}")


class InvalidArrangementError(WorkbenchInputError):
    """Operation requires a valid arrangement."""


class InvalidWiringError(WorkbenchInputError):
    """Operation requires a valid wiring diagram."""


class InconsistentTVectorError(WorkbenchInputError):
    """The t-vector violates the pair count identity."""


class PencilError(WorkbenchInputError):
    """All lines pass through one point."""


class DuplicateLineError(WorkbenchInputError):
    """Two input lines coincide projectively."""


class UnknownConstraintError(WorkbenchInputError):
    """Constraint id is not in the catalogue."""


class UnknownSuiteError(WorkbenchInputError):
    """Suite id is not known."""


class ParameterRangeError(WorkbenchInputError):
    """A numeric parameter is outside its admissible range."""


class ChamberNotFoundError(WorkbenchInputError):
    """The chamber does not belong to the wiring diagram's decomposition."""
