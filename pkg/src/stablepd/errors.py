"""Exception types raised across the package."""


class StablePDError(Exception):
    """Base class for every error raised by stablepd."""


class RingMismatch(StablePDError):
    """Operands live in different polynomial rings."""


class NotProper(StablePDError):
    """The operation needs a proper, nonzero ideal."""


class TooLarge(StablePDError):
    """Input exceeds the desk-scale limits of the exact algorithms."""


class EmptyIdeal(StablePDError):
    """A constructor would produce an ideal with no generators."""


class ParseError(StablePDError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class UnknownVariable(ParseError):
    pass
