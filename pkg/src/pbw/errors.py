class SearchBudgetExceeded(RuntimeError):
    """A bounded exhaustive search ran past its configured node budget."""
