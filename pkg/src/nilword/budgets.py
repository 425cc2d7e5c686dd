"""Enumeration budgets and the error raised when a computation would exceed one.

Budgets are passed explicitly to the operations that enumerate; there is no
global mutable state. Exceeding a budget is always an error, never a silent
truncation.
"""

# points of F_p^d materialized by Subspace.enumerate and friends
DEFAULT_ENUM_POINTS = 10_000_000

# projective/complement points swept by word_image and breadth_profile
DEFAULT_IMAGE_POINTS = 10_000_000

# ordered (x, y) pairs swept by word_image_bruteforce
DEFAULT_ORACLE_PAIRS = 100_000_000


class BudgetExceededError(RuntimeError):
    """An exact enumeration would exceed its configured budget."""
