"""Exception hierarchy with stable machine-readable error codes.

Every error carries a ``code`` string suitable for scripting against the CLI
(`error: <code>: <message>` on stderr).
"""


class SimulationError(Exception):
    """Base class for all errors raised by this package."""

    code = "error"

    def __init__(self, message: str, code: str | None = None):
        super().__init__(message)
        if code is not None:
            self.code = code


class UsageError(SimulationError):
    """Bad command line: unknown flag, conflicting flags, malformed value."""

    code = "usage"


class InvalidParameterError(SimulationError, ValueError):
    """A physical parameter violates its domain (e.g. separation <= 0)."""

    code = "invalid-parameter"


class InvalidStateError(SimulationError, ValueError):
    """A density matrix or X-state fails positivity/trace/hermiticity checks."""

    code = "invalid-state"


class NonConvergenceError(SimulationError, RuntimeError):
    """Step-halving verification of the dense integrator failed."""

    code = "non-convergence"


class HorizonError(SimulationError, RuntimeError):
    """Concurrence still rising and above threshold at the sampling horizon."""

    code = "horizon-too-short"


class DegenerateGeneratorError(SimulationError, RuntimeError):
    """Population generator has a nullspace of dimension > 1 (|f| = 1)."""

    code = "degenerate-generator"


class FormulaSingularError(SimulationError, ArithmeticError):
    """Closed-form rate formula is singular at this point; use the numerical rate."""

    code = "formula-singular"
