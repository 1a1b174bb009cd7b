"""Exception types shared across the package."""


class InputError(ValueError):
    """Raised when a caller hands in a malformed automaton, query, or instance."""


class ParseError(InputError):
    """Raised by the text-format parsers; the message names the offending line."""

    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line
