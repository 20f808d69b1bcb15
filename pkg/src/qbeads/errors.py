"""Exception types shared across the package.

Two failure categories are kept distinct because the command line maps
them to different exit codes: malformed or out-of-contract input
(InputError, exit 2) versus well-formed objects that fail an axiom or an
expected-value comparison (exit 1, reported as data rather than raised).
"""


class QBeadsError(Exception):
    """Base class for all package-specific errors."""


class InputError(QBeadsError):
    """Malformed input: bad file syntax, out-of-range index, wrong shape."""


class AxiomError(QBeadsError):
    """Raised when constructing an object whose defining axioms fail.

    Carries the full violation report so callers can print it.
    """

    def __init__(self, message, violations):
        super().__init__(message)
        self.violations = list(violations)
