"""Exception hierarchy shared by every module.

Each class carries a short machine-readable ``code`` that the command line
interface copies into its JSON error report.
"""

from __future__ import annotations


class LinforestError(ValueError):
    """Base class for domain errors (bad input, violated precondition)."""

    code = "domain_error"


class GraphOrderError(LinforestError):
    code = "order_overflow"


class SizeGuardError(LinforestError):
    """An exponential routine was called on an input above its size guard."""

    code = "size_guard"


class HypothesisError(LinforestError):
    """Input lies outside the hypotheses of a closed-form evaluator."""

    code = "hypothesis_violation"


class ConstraintError(LinforestError):
    code = "constraint_violation"


class BudgetExceeded(LinforestError):
    """A search visited more nodes than its work budget allows."""

    code = "budget_exceeded"

    def __init__(self, budget: int, visited: int, what: str = "search"):
        self.budget = budget
        self.visited = visited
        super().__init__(f"{what} exceeded its budget of {budget} nodes (visited {visited})")
