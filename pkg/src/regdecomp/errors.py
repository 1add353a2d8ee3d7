class BudgetExceeded(RuntimeError):
    """Raised when a search visits more nodes than its budget allows."""

    def __init__(self, budget: int, visited: int | None = None):
        self.budget = budget
        self.visited = visited
        msg = f"node budget of {budget} exceeded"
        if visited is not None:
            msg += f" after {visited} nodes"
        super().__init__(msg)


class CapacityError(RuntimeError):
    """Raised when a group is too large to enumerate element by element."""
