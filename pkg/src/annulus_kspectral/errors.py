"""Exception and warning types raised by the toolkit."""


class WindowOverflow(ValueError):
    """A shift would move nonzero mass outside the truncation window."""


class WindowTooLarge(ValueError):
    """A requested window exceeds the configured length cap."""


class InvariantViolation(RuntimeError):
    """An internal consistency check failed. Indicates a bug, not bad input."""


class ConsistencyViolation(InvariantViolation):
    """A bound table has a lower bound above an upper bound."""


class NonConvergenceWarning(RuntimeWarning):
    """An iterative routine stopped at its iteration cap."""
