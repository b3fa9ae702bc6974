"""Letters, words and group contexts for the free braid groups.

Four presentations share one alphabet layout:

* ``plain``: crossings ``a(i,j)``, the group of colored free braids.
* ``parity``: crossings carrying a parity bit, ``a(i,j;e)``.
* ``dotted``: crossings plus dots ``t(i)`` sitting on strand ``i``.
* ``quotient-forbidden``: plain crossings on ``n`` strands with crossings
  that share strand ``n`` allowed to commute.

Every generator is an involution, so the identity is the empty word and the
inverse of a word is its reversal.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, Union

from .errors import (
    ContextMismatch,
    IndexOutOfRange,
    LetterKindMismatch,
    WordSyntaxError,
)


class Kind(str, enum.Enum):
    PLAIN = "plain"
    PARITY = "parity"
    DOTTED = "dotted"
    QUOTIENT = "quotient-forbidden"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, order=True)
class Crossing:
    i: int
    j: int

    def __post_init__(self):
        if self.i > self.j:
            a, b = self.j, self.i
            object.__setattr__(self, "i", a)
            object.__setattr__(self, "j", b)
        if self.i == self.j:
            raise ValueError(f"crossing needs two distinct strands, got ({self.i},{self.j})")

    @property
    def pair(self) -> tuple[int, int]:
        return (self.i, self.j)

    def __str__(self) -> str:
        return f"a({self.i},{self.j})"


@dataclass(frozen=True, order=True)
class ParityCrossing:
    i: int
    j: int
    eps: int

    def __post_init__(self):
        if self.i > self.j:
            a, b = self.j, self.i
            object.__setattr__(self, "i", a)
            object.__setattr__(self, "j", b)
        if self.i == self.j:
            raise ValueError(f"crossing needs two distinct strands, got ({self.i},{self.j})")
        if self.eps not in (0, 1):
            raise ValueError(f"parity bit must be 0 or 1, got {self.eps}")

    @property
    def pair(self) -> tuple[int, int]:
        return (self.i, self.j)

    def __str__(self) -> str:
        return f"a({self.i},{self.j};{self.eps})"


@dataclass(frozen=True, order=True)
class Dot:
    i: int

    def __str__(self) -> str:
        return f"t({self.i})"


Letter = Union[Crossing, ParityCrossing, Dot]


def a(i: int, j: int, eps: int | None = None) -> Crossing | ParityCrossing:
    """Shorthand constructor: ``a(1, 2)`` or ``a(1, 2, 1)``."""
    if eps is None:
        return Crossing(i, j)
    return ParityCrossing(i, j, eps)


def t(i: int) -> Dot:
    return Dot(i)


@dataclass(frozen=True)
class GroupContext:
    n: int
    kind: Kind = Kind.PLAIN

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if self.n < 1:
            raise ValueError(f"strand count must be >= 1, got {self.n}")

    @property
    def distinguished_strand(self) -> int | None:
        return self.n if self.kind is Kind.QUOTIENT else None

    def pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(1, self.n + 1) for j in range(i + 1, self.n + 1)]

    def generators(self) -> list[Letter]:
        """All generators of the presentation, in a fixed order."""
        if self.kind is Kind.PARITY:
            return [ParityCrossing(i, j, e) for (i, j) in self.pairs() for e in (0, 1)]
        gens: list[Letter] = [Crossing(i, j) for (i, j) in self.pairs()]
        if self.kind is Kind.DOTTED:
            gens += [Dot(i) for i in range(1, self.n + 1)]
        return gens

    def __str__(self) -> str:
        return f"{self.kind.value}(n={self.n})"


def plain(n: int) -> GroupContext:
    return GroupContext(n, Kind.PLAIN)


def parity(n: int) -> GroupContext:
    return GroupContext(n, Kind.PARITY)


def dotted(n: int) -> GroupContext:
    return GroupContext(n, Kind.DOTTED)


def quotient(n: int) -> GroupContext:
    return GroupContext(n, Kind.QUOTIENT)


_LEGAL = {
    Kind.PLAIN: (Crossing,),
    Kind.QUOTIENT: (Crossing,),
    Kind.PARITY: (ParityCrossing,),
    Kind.DOTTED: (Crossing, Dot),
}


def check_letters(context: GroupContext, letters: Iterable[Letter]) -> None:
    legal = _LEGAL[context.kind]
    for pos, letter in enumerate(letters):
        if not isinstance(letter, legal):
            raise LetterKindMismatch(pos, f"{letter} is not a generator of {context}")
        top = letter.i if isinstance(letter, Dot) else letter.j
        if letter.i < 1 or top > context.n:
            raise IndexOutOfRange(pos, f"{letter} exceeds n={context.n}")


@dataclass(frozen=True)
class Word:
    """An immutable word in the generators of ``context``.

    Construction validates every letter, so a ``Word`` that exists is legal.
    """

    context: GroupContext
    letters: tuple[Letter, ...] = field(default=())

    def __post_init__(self):
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))
        check_letters(self.context, self.letters)

    @classmethod
    def parse(cls, text: str, context: GroupContext) -> "Word":
        return parse(text, context)

    @classmethod
    def identity(cls, context: GroupContext) -> "Word":
        return cls(context, ())

    @property
    def n(self) -> int:
        return self.context.n

    @property
    def kind(self) -> Kind:
        return self.context.kind

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.context, self.letters[item])
        return self.letters[item]

    def __add__(self, other: "Word") -> "Word":
        if other.context != self.context:
            raise ContextMismatch(f"cannot concatenate {self.context} and {other.context}")
        return Word(self.context, self.letters + other.letters)

    def with_letters(self, letters: Sequence[Letter]) -> "Word":
        return Word(self.context, tuple(letters))

    def is_identity_word(self) -> bool:
        return not self.letters

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"Word({self.context}, {render(self)!r})"


def validate(word: Word) -> None:
    """Re-check a word's letters against its context; raises on failure."""
    check_letters(word.context, word.letters)


def require_kind(word: Word, *kinds: Kind) -> None:
    if word.context.kind not in kinds:
        names = ", ".join(k.value for k in kinds)
        raise ContextMismatch(f"expected a word in a {names} context, got {word.context}")


def involutive_reduce(word: Word) -> Word:
    """Delete adjacent equal letters until none remain."""
    stack: list[Letter] = []
    for letter in word.letters:
        if stack and stack[-1] == letter:
            stack.pop()
        else:
            stack.append(letter)
    return Word(word.context, tuple(stack))


def inverse(word: Word) -> Word:
    return Word(word.context, word.letters[::-1])


_TOKEN = re.compile(r"\s*(?:(a)\(\s*(\d+)\s*,\s*(\d+)\s*(?:;\s*(\d+)\s*)?\)|(t)\(\s*(\d+)\s*\))")


def parse(text: str, context: GroupContext) -> Word:
    """Parse whitespace-separated ``a(i,j)``, ``a(i,j;e)`` and ``t(i)`` tokens."""
    letters: list[Letter] = []
    pos = 0
    end = len(text)
    while True:
        while pos < end and text[pos].isspace():
            pos += 1
        if pos >= end:
            break
        if letters and not text[pos - 1].isspace():
            raise WordSyntaxError(pos, "whitespace between tokens")
        m = _TOKEN.match(text, pos)
        if m is None:
            raise WordSyntaxError(pos, "a(i,j), a(i,j;e) or t(i)")
        if m.group(1):
            i, j = int(m.group(2)), int(m.group(3))
            if i == j:
                raise WordSyntaxError(pos, "two distinct strand indices")
            if m.group(4) is None:
                letters.append(Crossing(i, j))
            else:
                e = int(m.group(4))
                if e not in (0, 1):
                    raise WordSyntaxError(m.start(4), "parity bit 0 or 1")
                letters.append(ParityCrossing(i, j, e))
        else:
            letters.append(Dot(int(m.group(6))))
        pos = m.end()
    return Word(context, tuple(letters))


def render(word: Word) -> str:
    return " ".join(str(letter) for letter in word.letters)
