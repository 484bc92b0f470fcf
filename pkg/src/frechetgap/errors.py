"""Exception types shared across the package."""


class InputError(ValueError):
    """Bad user-supplied data: malformed files, mismatched dimensions, invalid parameters."""


class InternalError(RuntimeError):
    """An internal invariant failed; indicates a bug, not bad input."""


class ContractViolationError(InternalError):
    """A contracted decider was asked about a range outside its view."""
