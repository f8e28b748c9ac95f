"""Exception hierarchy shared by every module of the package."""


class PathChromError(Exception):
    """Base class for all errors raised by pathchrom."""


class InvalidParameterError(PathChromError, ValueError):
    pass


class InvalidVertexError(InvalidParameterError):
    pass


class InvalidStructureError(PathChromError, ValueError):
    """A decomposition (or its tree) is malformed or violates an axiom."""


class PreconditionError(PathChromError, ValueError):
    pass


class SizeLimitError(PathChromError):
    """The instance is larger than a solver's guard allows."""


class ParseError(PathChromError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
