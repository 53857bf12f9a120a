class ProtoAlgError(Exception):
    """Base class for all errors raised by this package."""


class ModelError(ProtoAlgError, ValueError):
    pass


class FormatError(ProtoAlgError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class TheoryError(ProtoAlgError, ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


class EvaluationError(ProtoAlgError, ValueError):
    pass


class NotRightCancellable(ProtoAlgError):
    pass


class MalcevViolation(ProtoAlgError):
    pass


class InvariantViolation(ProtoAlgError):
    """A structure failed a law that its construction should guarantee."""


class SearchBoundsError(ProtoAlgError, ValueError):
    pass
