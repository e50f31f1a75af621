from __future__ import annotations

from typing import NamedTuple

__all__ = ["Issue", "CurveError", "InvariantError", "SearchSpaceTooLarge"]


class Issue(NamedTuple):
    kind: str
    where: str
    message: str

    def __str__(self):
        return f"[{self.kind}] {self.where}: {self.message}"


class CurveError(ValueError):
    """A curve description failed validation; ``issues`` lists every breach."""

    def __init__(self, issues):
        self.issues = list(issues)
        super().__init__("\n".join(str(i) for i in self.issues))

    @property
    def kinds(self) -> set[str]:
        return {i.kind for i in self.issues}


class InvariantError(RuntimeError):
    """An internal invariant was violated; indicates a bug or corrupt input."""


class SearchSpaceTooLarge(ValueError):
    """Exhaustive search would exceed the configured cap."""
