"""Free braid groups with parity and dots: words, maps, invariants."""

from .errors import (
    ContextMismatch,
    FreeBraidError,
    IndexOutOfRange,
    LetterKindMismatch,
    NotInH,
    NotPure,
    PatternMismatch,
    WordSyntaxError,
)
from .words import (
    Crossing,
    Dot,
    GroupContext,
    Kind,
    ParityCrossing,
    Word,
    a,
    dotted,
    inverse,
    involutive_reduce,
    parity,
    parse,
    plain,
    quotient,
    render,
    t,
    validate,
)

__all__ = [
    "ContextMismatch",
    "Crossing",
    "Dot",
    "FreeBraidError",
    "GroupContext",
    "IndexOutOfRange",
    "Kind",
    "LetterKindMismatch",
    "NotInH",
    "NotPure",
    "ParityCrossing",
    "PatternMismatch",
    "Word",
    "WordSyntaxError",
    "a",
    "dotted",
    "inverse",
    "involutive_reduce",
    "parity",
    "parse",
    "plain",
    "quotient",
    "render",
    "t",
    "validate",
]
