"""Exception hierarchy shared by every module."""

from __future__ import annotations


class FreeBraidError(Exception):
    """Base class for all computation errors raised by this package."""


class WordError(FreeBraidError):
    def __init__(self, position: int, message: str):
        self.position = position
        super().__init__(f"position {position}: {message}")


class IndexOutOfRange(WordError):
    pass


class LetterKindMismatch(WordError):
    pass


class WordSyntaxError(WordError):
    def __init__(self, position: int, expected: str):
        self.expected = expected
        super().__init__(position, f"expected {expected}")


class ContextMismatch(FreeBraidError):
    pass


class NotInH(FreeBraidError):
    """A dotted word has an odd number of dots on some strand."""


class PatternMismatch(FreeBraidError):
    pass


class NotPure(FreeBraidError):
    pass


class EventOutOfRange(FreeBraidError):
    pass


class InvalidColoring(FreeBraidError):
    pass
