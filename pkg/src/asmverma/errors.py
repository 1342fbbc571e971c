"""Exception hierarchy shared by all modules."""


class AsmvError(Exception):
    """Base class for errors raised by this package."""


class InputError(AsmvError, ValueError):
    """Malformed or inconsistent input (bad permutation, invalid ASM, size mismatch)."""


class ResourceLimitError(AsmvError):
    """A requested computation exceeds a configured size bound."""


class VerificationError(AsmvError):
    """A verification suite found a counterexample.

    ``report`` carries the machine-readable failure details.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report if report is not None else {}
