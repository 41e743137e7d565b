"""Exception types shared across the package.

Plain ``ValueError``/``IndexError`` are used for bad scalar arguments and
out-of-range qubit indices; the classes below cover failures that callers
may want to catch (and that the CLI maps to distinct exit codes).
"""


class SimulatorError(Exception):
    """Base class for all package-specific errors."""


class CapacityError(SimulatorError):
    """Requested qubit count exceeds the configured memory cap."""


class CircuitSyntaxError(SimulatorError):
    """A circuit or noise-config file failed to parse.

    Carries the 1-based line number of the offending line when known.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class CompileError(SimulatorError):
    """The transpiler met an instruction it cannot lower."""


class StateFormatError(SimulatorError):
    """A coefficient file is malformed or violates state invariants."""


class InternalError(SimulatorError):
    """An internal consistency check failed; indicates a bug, not bad input."""
