"""Exception classes shared across the package."""


class ParseError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvariantError(RuntimeError):
    """An internal structural check failed; indicates a bug upstream of the check."""


class OracleBudgetError(ValueError):
    """Raised by a brute-force oracle that refuses an input it cannot afford."""


class NotTwinlessError(ValueError):
    """The input graph is not twinless strongly connected."""
