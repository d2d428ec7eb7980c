"""Exception types shared across the package."""


class UsageError(ValueError):
    """Bad input: malformed text, out-of-range sizes, violated preconditions."""


class ConsistencyError(ArithmeticError):
    """A closed form or identity that must hold exactly did not.

    Raised on inexact divisions and parity violations; it always points at a
    transcription bug rather than at bad user input.
    """


class ParseError(UsageError):
    """Parse failure carrying the offending text and a column for the caret."""

    def __init__(self, message, text, pos):
        self.message = message
        self.text = text
        self.pos = pos
        super().__init__(self.annotated())

    def annotated(self):
        return f"{self.message}\n  {self.text}\n  {' ' * self.pos}^"
