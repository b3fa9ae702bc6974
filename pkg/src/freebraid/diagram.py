"""Position-encoded free braid diagrams.

A diagram on ``n`` strands is a top-to-bottom list of events; event ``p``
means the strands currently in positions ``p`` and ``p + 1`` cross.  Free
crossings carry no over/under data, so this is all there is.

Text format::

    braid n=3
    1 2 2 1
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import EventOutOfRange, InvalidColoring, NotPure, PatternMismatch, WordSyntaxError
from .words import Crossing, Word, plain


@dataclass(frozen=True)
class BraidDiagram:
    n: int
    events: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(self.events))
        for k, p in enumerate(self.events):
            if not 1 <= p <= self.n - 1:
                raise EventOutOfRange(f"event {k}: position {p} not in 1..{self.n - 1}")

    def __len__(self) -> int:
        return len(self.events)

    def __add__(self, other: "BraidDiagram") -> "BraidDiagram":
        if other.n != self.n:
            raise ValueError("strand counts differ")
        return BraidDiagram(self.n, self.events + other.events)

    def to_text(self) -> str:
        return f"braid n={self.n}\n" + " ".join(map(str, self.events))

    def to_dict(self, coloring: "Coloring | None" = None) -> dict:
        out = {"n": self.n, "events": list(self.events)}
        if coloring is not None:
            out["coloring"] = list(coloring.colors)
        return out


_HEADER = re.compile(r"\s*braid\s+n\s*=\s*(\d+)")


def parse_diagram(text: str) -> BraidDiagram:
    m = _HEADER.match(text)
    if m is None:
        raise WordSyntaxError(0, "header 'braid n=<n>'")
    events = []
    for tok in re.finditer(r"\S+", text[m.end():]):
        if not tok.group().isdigit():
            raise WordSyntaxError(m.end() + tok.start(), "event position")
        events.append(int(tok.group()))
    return BraidDiagram(int(m.group(1)), tuple(events))


@dataclass(frozen=True)
class Coloring:
    """Component number of the strand starting at each position (1-based)."""

    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        if sorted(self.colors) != list(range(1, len(self.colors) + 1)):
            raise InvalidColoring(f"{self.colors} is not a permutation of 1..{len(self.colors)}")

    @classmethod
    def identity(cls, n: int) -> "Coloring":
        return cls(tuple(range(1, n + 1)))


def permutation(d: BraidDiagram) -> tuple[int, ...]:
    """``perm[q-1]`` is the starting position of the strand ending at position ``q``."""
    occ = list(range(1, d.n + 1))
    for p in d.events:
        occ[p - 1], occ[p] = occ[p], occ[p - 1]
    return tuple(occ)


def is_pure(d: BraidDiagram) -> bool:
    return permutation(d) == tuple(range(1, d.n + 1))


def iota(d: BraidDiagram, coloring: Coloring | None = None) -> Word:
    """Word of a colored pure diagram: one ``a(i,j)`` per crossing, in height order."""
    if coloring is None:
        coloring = Coloring.identity(d.n)
    if len(coloring.colors) != d.n:
        raise InvalidColoring(f"coloring has {len(coloring.colors)} entries for {d.n} strands")
    if not is_pure(d):
        raise NotPure(f"diagram permutes strands: {permutation(d)}")
    occ = list(coloring.colors)
    out = []
    for p in d.events:
        out.append(Crossing(occ[p - 1], occ[p]))
        occ[p - 1], occ[p] = occ[p], occ[p - 1]
    return Word(plain(d.n), tuple(out))


INSERT = "insert"
DELETE = "delete"
COMMUTE = "commute"
TRIANGLE = "triangle"


@dataclass(frozen=True)
class ArtinMove:
    """An Artin move at event index ``index``.

    ``insert`` puts a double crossing at ``position`` before event ``index``;
    ``delete`` removes the equal events ``index, index+1``; ``commute`` swaps
    far-apart events ``index, index+1``; ``triangle`` turns ``p, p+1, p`` into
    ``p+1, p, p+1`` (or back) starting at ``index``.
    """

    kind: str
    index: int
    position: int | None = None


def apply_artin_move(d: BraidDiagram, move: ArtinMove) -> BraidDiagram:
    ev = list(d.events)
    k = move.index
    if move.kind == INSERT:
        if move.position is None or not 0 <= k <= len(ev):
            raise PatternMismatch(f"cannot insert at event index {k}")
        ev[k:k] = [move.position, move.position]
        return BraidDiagram(d.n, tuple(ev))
    if move.kind == DELETE:
        if k + 1 >= len(ev) or k < 0 or ev[k] != ev[k + 1]:
            raise PatternMismatch(f"no double crossing at event index {k}")
        del ev[k:k + 2]
    elif move.kind == COMMUTE:
        if k + 1 >= len(ev) or k < 0 or abs(ev[k] - ev[k + 1]) < 2:
            raise PatternMismatch(f"events at {k}, {k + 1} are not far apart")
        ev[k], ev[k + 1] = ev[k + 1], ev[k]
    elif move.kind == TRIANGLE:
        if k < 0 or k + 2 >= len(ev):
            raise PatternMismatch(f"no triangle at event index {k}")
        p, q, r = ev[k:k + 3]
        if p != r or abs(p - q) != 1:
            raise PatternMismatch(f"events {p} {q} {r} are not a triangle pattern")
        ev[k:k + 3] = [q, p, q]
    else:
        raise PatternMismatch(f"unknown move kind {move.kind!r}")
    return BraidDiagram(d.n, tuple(ev))


def applicable_moves(d: BraidDiagram, insert: bool = True) -> list[ArtinMove]:
    """Every move that matches somewhere in ``d``."""
    ev = d.events
    moves: list[ArtinMove] = []
    if insert:
        moves += [ArtinMove(INSERT, k, p) for k in range(len(ev) + 1) for p in range(1, d.n)]
    for k in range(len(ev) - 1):
        if ev[k] == ev[k + 1]:
            moves.append(ArtinMove(DELETE, k))
        if abs(ev[k] - ev[k + 1]) >= 2:
            moves.append(ArtinMove(COMMUTE, k))
    for k in range(len(ev) - 2):
        p, q, r = ev[k:k + 3]
        if p == r and abs(p - q) == 1:
            moves.append(ArtinMove(TRIANGLE, k))
    return moves

