"""Homomorphisms between the plain, parity, dotted and quotient groups.

All maps act letter by letter on word representatives.  ``chi`` is the one
exception: it reads the dots seen so far to assign a parity bit to each
crossing, so it is a single left-to-right pass rather than a substitution.
"""

from __future__ import annotations

from .errors import ContextMismatch, IndexOutOfRange, NotInH
from .words import (
    Crossing,
    Dot,
    GroupContext,
    Kind,
    Letter,
    ParityCrossing,
    Word,
    dotted,
    parity,
    plain,
    quotient,
    require_kind,
)


def embed_parity(w: Word) -> Word:
    """``a(i,j) -> a(i,j;0)``."""
    require_kind(w, Kind.PLAIN)
    return Word(parity(w.n), tuple(ParityCrossing(x.i, x.j, 0) for x in w))


def project_parity(w: Word) -> Word:
    """Keep even crossings, erase odd ones."""
    require_kind(w, Kind.PARITY)
    return Word(plain(w.n), tuple(Crossing(x.i, x.j) for x in w if x.eps == 0))


def phi(w: Word) -> Word:
    """``a(i,j;0) -> a(i,j)`` and ``a(i,j;1) -> t(i) a(i,j) t(i)``."""
    require_kind(w, Kind.PARITY)
    out: list[Letter] = []
    for x in w:
        c = Crossing(x.i, x.j)
        if x.eps:
            out += [Dot(x.i), c, Dot(x.i)]
        else:
            out.append(c)
    return Word(dotted(w.n), tuple(out))


def dot_counts(w: Word) -> dict[int, int]:
    """Number of ``t(i)`` letters for every strand ``i``."""
    require_kind(w, Kind.DOTTED)
    counts = {i: 0 for i in range(1, w.n + 1)}
    for x in w:
        if isinstance(x, Dot):
            counts[x.i] += 1
    return counts


def in_H(w: Word) -> bool:
    return all(c % 2 == 0 for c in dot_counts(w).values())


def parity_bits(w: Word) -> tuple[Word, frozenset[int]]:
    """Run the dot-counting pass on any dotted word.

    Returns the parity word (bit of each crossing = dots seen so far on its
    two strands, mod 2) and the set of strands with an odd total dot count.
    On words in H this is exactly ``chi``.
    """
    require_kind(w, Kind.DOTTED)
    odd = [0] * (w.n + 1)
    out = []
    for x in w:
        if isinstance(x, Dot):
            odd[x.i] ^= 1
        else:
            out.append(ParityCrossing(x.i, x.j, odd[x.i] ^ odd[x.j]))
    leftover = frozenset(i for i in range(1, w.n + 1) if odd[i])
    return Word(parity(w.n), tuple(out)), leftover


def chi(w: Word) -> Word:
    """Inverse of ``phi`` on H: dotted words with even dot counts."""
    word, leftover = parity_bits(w)
    if leftover:
        raise NotInH(f"odd number of dots on strand(s) {sorted(leftover)}")
    return word


def psi_m(w: Word, m: int) -> Word:
    """Delete strand ``m`` of a plain word on ``n+1`` strands.

    A crossing with strand ``m`` becomes a dot on its partner; every other
    index above ``m`` shifts down by one.
    """
    require_kind(w, Kind.PLAIN, Kind.QUOTIENT)
    if w.n < 2:
        raise ContextMismatch("strand deletion needs at least two strands")
    if not 1 <= m <= w.n:
        raise IndexOutOfRange(0, f"strand {m} not in 1..{w.n}")
    if w.kind is Kind.QUOTIENT and m != w.n:
        raise ContextMismatch("only the distinguished strand can be deleted from a quotient word")

    def shift(k: int) -> int:
        return k - 1 if k > m else k

    out: list[Letter] = []
    for x in w:
        if x.i == m:
            out.append(Dot(shift(x.j)))
        elif x.j == m:
            out.append(Dot(shift(x.i)))
        else:
            out.append(Crossing(shift(x.i), shift(x.j)))
    return Word(dotted(w.n - 1), tuple(out))


def psi(w: Word) -> Word:
    """Delete the last strand."""
    return psi_m(w, w.n)


def omega(w: Word) -> Word:
    """``t(i) -> a(i,n+1)``; lands in the quotient by the forbidden move."""
    require_kind(w, Kind.DOTTED)
    top = w.n + 1
    out = tuple(Crossing(x.i, top) if isinstance(x, Dot) else x for x in w)
    return Word(quotient(top), out)


def forget_dots(w: Word) -> Word:
    require_kind(w, Kind.DOTTED)
    return Word(plain(w.n), tuple(x for x in w if not isinstance(x, Dot)))


def as_plain(w: Word) -> Word:
    """View a quotient word as a plain word on the same strands."""
    require_kind(w, Kind.QUOTIENT, Kind.PLAIN)
    return Word(plain(w.n), w.letters)


def as_quotient(w: Word) -> Word:
    require_kind(w, Kind.QUOTIENT, Kind.PLAIN)
    return Word(quotient(w.n), w.letters)


MAP_NAMES = ("i", "p", "phi", "chi", "psi", "psi:m", "omega", "forget")


def apply_named(name: str, w: Word) -> Word:
    """Dispatch by CLI name: ``i``, ``p``, ``phi``, ``chi``, ``psi``, ``psi:<m>``, ``omega``, ``forget``."""
    if name.startswith("psi:"):
        return psi_m(w, int(name[4:]))
    table = {
        "i": embed_parity,
        "p": project_parity,
        "phi": phi,
        "chi": chi,
        "psi": psi,
        "omega": omega,
        "forget": forget_dots,
    }
    try:
        fn = table[name]
    except KeyError:
        raise ValueError(f"unknown map {name!r}; choose from {', '.join(MAP_NAMES)}") from None
    return fn(w)


def source_context(name: str, n: int) -> GroupContext:
    """Context a named map expects on ``n`` strands."""
    base = name.split(":")[0]
    kind = {
        "i": Kind.PLAIN,
        "p": Kind.PARITY,
        "phi": Kind.PARITY,
        "chi": Kind.DOTTED,
        "psi": Kind.PLAIN,
        "omega": Kind.DOTTED,
        "forget": Kind.DOTTED,
    }[base]
    return GroupContext(n, kind)
