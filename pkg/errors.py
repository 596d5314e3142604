# errors.py

"""
Exception hierarchy shared by every module.

Each family carries the process exit code the CLI reports for it:
parse 2, validation 3, monodromy rejection 4, capacity 5.
"""


class JohanssonError(Exception):
    exit_code = 1

    @property
    def kind(self) -> str:
        return type(self).__name__


########################################
# Parse errors (exit 2)
########################################
class ParseError(JohanssonError):
    exit_code = 2

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            where = f"line {line}" if column is None else f"line {line}, column {column}"
            message = f"{where}: {message}"
        super().__init__(message)


class OutOfRange(ParseError):
    pass


class RepeatedEntry(ParseError):
    pass


########################################
# Validation errors (exit 3)
########################################
class ValidationError(JohanssonError):
    exit_code = 3


class SeamMismatch(ValidationError):
    pass


class OrientationError(ValidationError):
    pass


class EmbeddingInconsistent(ValidationError):
    pass


class TripletClosureFailed(ValidationError):
    pass


class SisteringInconsistent(ValidationError):
    pass


class SkeletonDisconnected(ValidationError):
    pass


class MultiComponentDomain(ValidationError):
    pass


class InvalidN(ValidationError):
    pass


class DiagramRejected(ValidationError):
    """Raised when a validation report has failures and the caller needs an accepted diagram."""

    def __init__(self, report):
        self.report = report
        super().__init__("; ".join(report.failure_messages()) or "diagram rejected")


########################################
# Monodromy rejection (exit 4)
########################################
class MonodromyError(JohanssonError):
    exit_code = 4


class MissingGenerator(MonodromyError):
    pass


class RepresentationRejected(MonodromyError):
    pass


########################################
# Capacity (exit 5)
########################################
class CapacityError(JohanssonError):
    exit_code = 5


class DegreeTooLarge(CapacityError):
    pass
