"""Exception types shared across the package."""


class InvalidWordError(ValueError):
    """A step word is not a valid Dyck word.

    The offending index is kept in ``position`` (for an imbalance the
    position is the word length, since the defect only shows at the end).
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position


class ResourceLimitError(Exception):
    """A request exceeds a configured size cap."""


class SeriesError(ArithmeticError):
    """Invalid truncated-series arithmetic (non-invertible divisor, failed exact division, ...)."""


class SolveError(SeriesError):
    """A series equation solver could not produce a verified solution."""


class RouteMismatchError(RuntimeError):
    """Two supposedly equivalent computation routes returned different results."""
