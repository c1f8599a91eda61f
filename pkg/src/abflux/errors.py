"""Exception hierarchy shared by the numerical modules and the CLI."""


class AbfluxError(Exception):
    """Base class for all library errors."""


class DomainError(AbfluxError, ValueError):
    """Argument outside the mathematical domain of a function."""


class PreconditionError(AbfluxError, ValueError):
    """Operation invoked with inputs it is not defined for (e.g. wrong flux class)."""


class ConvergenceError(AbfluxError, ArithmeticError):
    """A series or quadrature exhausted its work budget before converging."""
