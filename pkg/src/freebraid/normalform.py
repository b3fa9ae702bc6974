"""Block normal form in H and exact reduction in the two-strand parity group.

On two strands the parity group has no far-commutativity or triangle
relations, so it is the free product of two involutions ``a(1,2;0)`` and
``a(1,2;1)``; free cancellation gives a unique alternating normal form.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContextMismatch, IndexOutOfRange, NotInH
from .maps import chi
from .rewriting import Step, apply_step, descend, erase_loops
from .words import Crossing, Dot, Kind, ParityCrossing, Word, dotted, parity, require_kind


@dataclass(frozen=True)
class Block:
    i: int
    j: int
    eps: int

    def __post_init__(self):
        if self.i > self.j:
            a, b = self.j, self.i
            object.__setattr__(self, "i", a)
            object.__setattr__(self, "j", b)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.i, self.j, self.eps)


@dataclass(frozen=True)
class BlockWord:
    """Product of blocks ``t(i)^e a(i,j) t(i)^e`` on ``n`` strands."""

    n: int
    blocks: tuple[Block, ...] = ()

    def __len__(self) -> int:
        return len(self.blocks)

    def to_list(self) -> list[list[int]]:
        return [list(b.as_tuple()) for b in self.blocks]

    @classmethod
    def from_list(cls, n: int, triples) -> "BlockWord":
        return cls(n, tuple(Block(*t) for t in triples))


def flatten(bw: BlockWord) -> Word:
    out = []
    for b in bw.blocks:
        c = Crossing(b.i, b.j)
        out += [Dot(b.i), c, Dot(b.i)] if b.eps else [c]
    return Word(dotted(bw.n), tuple(out))


def normalize_H(w: Word) -> BlockWord:
    """Block form of a word in H: one block per crossing, bit = dot parity before it."""
    require_kind(w, Kind.DOTTED)
    image = chi(w)
    return BlockWord(w.n, tuple(Block(x.i, x.j, x.eps) for x in image))


def normalize_H_witness(w: Word) -> tuple[BlockWord, tuple[Step, ...]]:
    """Block form plus the dot-pushing rewrite path from ``w`` to it.

    The path only uses relations of the dotted presentation and ends at
    ``flatten(normalize_H(w))``.
    """
    require_kind(w, Kind.DOTTED)
    bw = normalize_H(w)
    target = flatten(bw)
    _, steps, _ = descend(w)
    # descend goes on to cancel adjacent equal blocks; stop at the block form
    word = w
    path: list[Step] = []
    if word.letters == target.letters:
        return bw, ()
    for s in steps:
        word = apply_step(word, s)
        path.append(s)
        if word.letters == target.letters:
            return bw, erase_loops(w, path)
    raise NotInH("dot pushing did not reach block form")  # pragma: no cover


def z2z2_reduce(w: Word) -> Word:
    """Free cancellation in the two-strand parity group."""
    require_kind(w, Kind.PARITY)
    if w.n != 2:
        raise ContextMismatch(f"two-strand parity word expected, got {w.context}")
    stack: list = []
    for x in w:
        if stack and stack[-1] == x:
            stack.pop()
        else:
            stack.append(x)
    return Word(w.context, tuple(stack))


def pair_projection(w: Word, i: int, j: int) -> Word:
    """Keep only crossings on the pair ``{i, j}``, relabelled onto two strands."""
    require_kind(w, Kind.PARITY)
    i, j = min(i, j), max(i, j)
    if i < 1 or j > w.n or i == j:
        raise IndexOutOfRange(0, f"pair ({i},{j}) not in 1..{w.n}")
    kept = tuple(ParityCrossing(1, 2, x.eps) for x in w if x.pair == (i, j))
    return Word(parity(2), kept)


def pair_profiles(w: Word) -> dict[tuple[int, int], Word]:
    """Reduced two-strand projection of ``w`` for every strand pair."""
    require_kind(w, Kind.PARITY)
    return {pair: z2z2_reduce(pair_projection(w, *pair)) for pair in w.context.pairs()}


def is_trivial_two_strand(w: Word) -> bool:
    return not z2z2_reduce(w).letters
