"""Typed errors shared across the package."""


class SyzlabError(Exception):
    """Base class for all package errors."""


class PolygonInputError(SyzlabError):
    """Malformed polygon input (non-integer, collinear, too few vertices)."""


class DegenerateInteriorError(SyzlabError):
    """The interior hull is not two-dimensional where it must be."""


class RegionMismatchError(SyzlabError):
    """A product monomial fell outside the declared target region."""


class BudgetExceededError(SyzlabError):
    """A matrix would exceed the configured cell budget."""

    def __init__(self, cells: int, budget: int, what: str = "matrix"):
        self.cells = cells
        self.budget = budget
        super().__init__(f"{what} needs {cells} cells, budget is {budget}")


class ConsistencyFailureError(SyzlabError):
    """An internal cross-check failed; indicates an implementation bug."""
