"""Exception types shared across the package."""


class InputError(ValueError):
    """A caller violated a documented precondition."""


class ParseError(ValueError):
    """Malformed DIMACS input. Carries the 1-based offending line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapacityError(RuntimeError):
    """A brute-force routine was asked to exceed its configured cap."""


class StructureError(RuntimeError):
    """Input data contradicts a structural guarantee the algorithm relies on."""
