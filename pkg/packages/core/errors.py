"""Exception hierarchy shared by the partmult packages."""

from __future__ import annotations


class PartmultError(Exception):
    """Base class for every error raised by partmult."""


class BudgetExceededError(PartmultError):
    """The projected work of a table build is above the configured ceiling."""

    def __init__(self, projected: int, ceiling: int, path: str) -> None:
        self.projected = projected
        self.ceiling = ceiling
        self.path = path
        super().__init__(
            f"{path} path needs ~{projected} big-integer additions, ceiling is {ceiling}; "
            "lower N or use the AP path"
        )


class UnsupportedDecompositionError(PartmultError):
    """The multiplicity set is not a finite union of progressions and points."""


class EmptyTruncationError(PartmultError, ValueError):
    """A bounded truncation of a set has no elements left."""


class OutOfRangeError(PartmultError, ValueError):
    """An argument lies outside the domain of a piecewise construction."""


class InvalidSequenceError(PartmultError, ValueError):
    def __init__(self, index: int, message: str) -> None:
        self.index = index
        super().__init__(f"term {index}: {message}")


class SchurHypothesisError(PartmultError, ValueError):
    """The part set does not satisfy the hypotheses of Schur's asymptotic."""


class UsageError(PartmultError):
    """Command-line flags that cannot be combined or are out of range."""
