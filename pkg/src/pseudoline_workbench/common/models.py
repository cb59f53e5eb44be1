"""
Shared data models for the workbench.

Pieces used by more than one sub-package: the validation report returned by
the arrangement and wiring validators, and the base class for models that
carry exact Fraction fields.
"""

from typing import List

from pydantic import BaseModel, ConfigDict, Field


class ExactModel(BaseModel):
    """Immutable model that may hold Fraction fields."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class ValidationReport(BaseModel):
    """Outcome of validating an arrangement or a wiring diagram."""
    subject: str
    n: int
    issues: List[str] = Field(default_factory=list)

    def is_valid(self) -> bool:
        """Check if no invariant was violated."""
        return not self.issues

    def summary(self) -> str:
        """One-line human summary."""
        if self.is_valid():
            return f"{self.subject} on {self.n} lines: valid"
        return f"{self.subject} on {self.n} lines: invalid ({len(self.issues)} issue(s))"
