"""Exception hierarchy shared by the library and the CLI."""


class InputError(ValueError):
    """Malformed or mathematically invalid input (singular matrix, bad dims)."""


class PreconditionError(InputError):
    """An instance violates the hypotheses an algorithm relies on."""


class BudgetExceeded(InputError):
    """Brute-force enumeration would exceed the configured point budget."""


class ParseError(InputError):
    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f"line {line}" + (f", col {col}" if col is not None else "") + ": "
        super().__init__(where + message)


class InvariantError(RuntimeError):
    """An internal invariant failed; indicates a bug, not bad input."""
