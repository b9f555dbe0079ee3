"""Exception types shared across the package."""


class InputError(ValueError):
    """An argument lies outside an operation's documented domain."""


class ParseError(InputError):
    """Malformed graph text; ``offset`` is the byte position when known."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class UnsupportedSizeError(InputError):
    """The graph is too large for the requested encoding."""


class ConvergenceError(RuntimeError):
    """An eigensolver failed to reach its tolerance.

    Carries the last eigenvalue estimate, the residual at the point of
    failure, and the number of iterations or sweeps performed.
    """

    def __init__(self, message: str, estimate: float | None = None,
                 residual: float | None = None, iterations: int | None = None):
        super().__init__(message)
        self.estimate = estimate
        self.residual = residual
        self.iterations = iterations


class ConsistencyError(RuntimeError):
    """The numeric bound comparison contradicts the symbolic classifier.

    This never happens for valid inputs; a raise means the build is broken.
    Both verdicts and the evaluated bound values are attached.
    """

    def __init__(self, message: str, numeric=None, symbolic=None,
                 f_value: float | None = None, g_value: float | None = None):
        super().__init__(message)
        self.numeric = numeric
        self.symbolic = symbolic
        self.f_value = f_value
        self.g_value = g_value
