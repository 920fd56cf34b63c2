"""Exception hierarchy for the numerical engines."""


class CesaroInterpError(Exception):
    """Base class for all library errors."""


class DomainError(CesaroInterpError, ValueError):
    """A parameter or input lies outside the operation's domain."""


class DivergenceError(CesaroInterpError, ArithmeticError):
    """A norm or integral is infinite for the given input."""


class SolverError(CesaroInterpError, RuntimeError):
    """The linear program failed or its certificate did not check out."""


class InvariantError(CesaroInterpError, AssertionError):
    """A structural precondition or computed-curve invariant is violated."""
