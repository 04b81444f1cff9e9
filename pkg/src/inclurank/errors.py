"""Exception types shared across the package."""


class ParameterError(ValueError):
    """A mathematically invalid parameter combination (maps to CLI exit 64)."""


class MemoryBudgetError(RuntimeError):
    """Dense construction would exceed the memory budget (maps to CLI exit 70).

    Callers over a prime field can fall back to the streaming rank path.
    """

    def __init__(self, needed: int, budget: int):
        self.needed = needed
        self.budget = budget
        super().__init__(
            f"dense matrix needs about {needed} bytes, budget is {budget};"
            " use streaming rank or the closed-form formula"
        )
