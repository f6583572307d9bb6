class HomydError(Exception):
    """Base exception for the homyd workbench."""

    pass


class ValidationError(HomydError):
    """Raised when inputs have mismatched shapes, fields, twists or modules."""

    pass


class FieldError(HomydError):
    """
    Raised on scalar trouble: an element outside the field, a modulus that is
    not prime, or a required inverse that does not exist (eg 1/2 in GF(2)).
    """

    pass


class SingularMatrixError(FieldError):
    """Raised when a matrix that must be inverted is singular."""

    pass


class DocumentError(HomydError):
    """
    Raised when a structure document cannot be parsed or is inconsistent.
    Carries the offending line number (1-based) when one is known.
    """

    def __init__(self, message: str, line: int = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ConstructionError(HomydError):
    """
    Raised when a constructor refuses its inputs because a gate check failed.
    The failing report travels with the exception.
    """

    def __init__(self, message: str, report=None):
        self.report = report
        super().__init__(message)


class FileSystemError(HomydError):
    """
    Raised when a document file cannot be read or written.
    """

    pass


class ConfigurationError(HomydError):
    """Raised when invalid configuration."""

    pass
