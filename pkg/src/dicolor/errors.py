"""Exception types shared across the package."""


class DicolorError(Exception):
    """Base class for all package errors."""


class ParseError(DicolorError):
    """Malformed edge-list input; carries the offending line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"{message} at line {line}"
        super().__init__(message)
        self.line = line


class CertificateError(DicolorError):
    """A supplied certificate violates one of its defining inequalities."""


class InvalidColoringError(DicolorError):
    """A coloring has a class inducing a circuit; carries that circuit."""

    def __init__(self, message, circuit=None):
        super().__init__(message)
        self.circuit = circuit


class CircuitCapError(DicolorError):
    """Circuit enumeration exceeded the configured cap."""


class SizeGuardError(DicolorError):
    """A brute-force operation was invoked beyond its intended size."""
