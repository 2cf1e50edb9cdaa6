"""Exception hierarchy shared by the pipeline stages."""


class LexigraphError(Exception):
    """Base class for all errors raised by lexigraph."""


class InvalidInput(LexigraphError, ValueError):
    pass


class LexiconError(LexigraphError, ValueError):
    """Malformed or inconsistent lexicon data.

    ``line`` is the 1-based line number in the source file when known.
    """

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DuplicateLexeme(LexiconError):
    pass


class UnknownLexeme(LexigraphError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown lexeme"


class SnapshotError(LexigraphError):
    pass


class SizeError(LexigraphError, ValueError):
    """Input too large for an exhaustive procedure."""
