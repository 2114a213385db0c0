"""Exception types raised by egfasym."""


class EgfError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(EgfError, ValueError):
    """Malformed textual input."""


class DomainError(EgfError, ValueError):
    """Input violates a mathematical precondition."""


class PrecisionError(EgfError, ArithmeticError):
    """Requested digits could not be certified within the precision cap."""


class ConvergenceError(EgfError, ArithmeticError):
    """An iterative solver failed to meet its residual tolerance."""
