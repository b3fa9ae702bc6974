"""Presentation relations as rewrite rules, plus a bounded equivalence oracle.

Every relation of every presentation is materialized with concrete indices
as a pair of oriented :class:`RewriteRule` objects.  ``neighbors`` applies one
rule at one position; :func:`bounded_equiv` searches the resulting graph.

The search is a desk-scale ground truth, not a decision procedure.  A
``distinct`` verdict only ever comes from a class invariant; running out of
search budget yields ``unknown``.
"""

from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import ContextMismatch, PatternMismatch
from .words import (
    Crossing,
    Dot,
    GroupContext,
    Kind,
    Letter,
    ParityCrossing,
    Word,
    render,
)

DEFAULT_LEN_SLACK = 6
DEFAULT_MAX_STATES = 2_000_000
# Budget for the first, short-witness search before the guided descent kicks in.
QUICK_STATES = 20_000


@dataclass(frozen=True)
class RewriteRule:
    lhs: tuple[Letter, ...]
    rhs: tuple[Letter, ...]
    tag: str
    forward: bool = True

    @property
    def direction(self) -> str:
        return "forward" if self.forward else "backward"

    def reversed(self) -> "RewriteRule":
        return RewriteRule(self.rhs, self.lhs, self.tag, not self.forward)

    def __str__(self) -> str:
        lhs = " ".join(map(str, self.lhs)) or "1"
        rhs = " ".join(map(str, self.rhs)) or "1"
        return f"[{self.tag}] {lhs} -> {rhs}"


@dataclass(frozen=True)
class Step:
    """One rule application: ``rule.lhs`` is replaced at ``position``."""

    position: int
    rule: RewriteRule

    @property
    def tag(self) -> str:
        return self.rule.tag

    @property
    def direction(self) -> str:
        return self.rule.direction

    def inverse(self) -> "Step":
        return Step(self.position, self.rule.reversed())

    def to_dict(self) -> dict:
        return {
            "position": self.position,
            "tag": self.rule.tag,
            "direction": self.rule.direction,
            "lhs": " ".join(map(str, self.rule.lhs)),
            "rhs": " ".join(map(str, self.rule.rhs)),
        }


EQUIVALENT = "equivalent"
DISTINCT = "distinct"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class EquivVerdict:
    status: str
    witness: tuple[Step, ...] | None = None
    invariant: str | None = None
    explored: int = 0
    detail: str = ""

    @property
    def is_equivalent(self) -> bool:
        return self.status == EQUIVALENT

    @property
    def is_distinct(self) -> bool:
        return self.status == DISTINCT

    @property
    def is_unknown(self) -> bool:
        return self.status == UNKNOWN

    def to_dict(self) -> dict:
        out: dict = {"verdict": self.status, "explored": self.explored}
        if self.witness is not None:
            out["witness"] = [s.to_dict() for s in self.witness]
        if self.invariant is not None:
            out["invariant"] = self.invariant
        if self.detail:
            out["detail"] = self.detail
        return out


def _sym(lhs, rhs, tag) -> list[RewriteRule]:
    rule = RewriteRule(tuple(lhs), tuple(rhs), tag)
    return [rule, rule.reversed()]


def _disjoint(p: tuple[int, int], q: tuple[int, int]) -> bool:
    return not set(p) & set(q)


def _crossing_rules(n: int, prefix: str, make) -> list[RewriteRule]:
    """Involution and far-commutativity rules.

    ``make(pair)`` lists the crossing letters on ``pair`` (two of them in
    the parity presentation, one otherwise).
    """
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    rules: list[RewriteRule] = []
    for p in pairs:
        for x in make(p):
            rules += _sym((x, x), (), f"{prefix}-1")
    for p, q in itertools.combinations(pairs, 2):
        if _disjoint(p, q):
            for x in make(p):
                for y in make(q):
                    rules += _sym((x, y), (y, x), f"{prefix}-2")
    return rules


def _triangle_rules(n: int, prefix: str, bits: Sequence[tuple[int, int, int]] | None) -> list[RewriteRule]:
    rules: list[RewriteRule] = []
    for i, j, k in itertools.combinations(range(1, n + 1), 3):
        pairs = [(i, j), (i, k), (j, k)]
        for order in itertools.permutations(range(3)):
            # xyz = zyx; one orientation per unordered relation is "forward".
            if order[0] > order[2]:
                continue
            if bits is None:
                word = [Crossing(*pairs[s]) for s in order]
                rules += _sym(word, word[::-1], f"{prefix}-3")
            else:
                for eps in bits:
                    word = [ParityCrossing(*pairs[s], eps[s]) for s in order]
                    rules += _sym(word, word[::-1], f"{prefix}-3")
    return rules


_EVEN_BITS = [e for e in itertools.product((0, 1), repeat=3) if sum(e) % 2 == 0]


@functools.lru_cache(maxsize=None)
def _rules(context: GroupContext) -> tuple[RewriteRule, ...]:
    n, kind = context.n, context.kind
    prefix = kind.value if kind is not Kind.QUOTIENT else "quotient"
    if kind is Kind.PARITY:
        rules = _crossing_rules(n, prefix, lambda p: [ParityCrossing(*p, 0), ParityCrossing(*p, 1)])
        rules += _triangle_rules(n, prefix, _EVEN_BITS)
    else:
        rules = _crossing_rules(n, prefix, lambda p: [Crossing(*p)])
        rules += _triangle_rules(n, prefix, None)
    if kind is Kind.DOTTED:
        dots = [Dot(i) for i in range(1, n + 1)]
        for d in dots:
            rules += _sym((d, d), (), "dotted-4")
        for d, e in itertools.combinations(dots, 2):
            rules += _sym((d, e), (e, d), "dotted-5")
        for i, j in itertools.combinations(range(1, n + 1), 2):
            x, ti, tj = Crossing(i, j), Dot(i), Dot(j)
            rules += _sym((ti, tj, x, tj, ti), (x,), "dotted-6")
            rules += _sym((tj, ti, x, ti, tj), (x,), "dotted-6")
            rules += _sym((ti, x, ti), (tj, x, tj), "dotted-6d")
            for k in range(1, n + 1):
                if k not in (i, j):
                    rules += _sym((x, Dot(k)), (Dot(k), x), "dotted-7")
    if kind is Kind.QUOTIENT:
        for i, j in itertools.combinations(range(1, n), 2):
            x, y = Crossing(i, n), Crossing(j, n)
            rules += _sym((x, y), (y, x), "quotient-f")
    return tuple(rules)


def rule_set(context: GroupContext) -> frozenset[RewriteRule]:
    """All rule instances of ``context``'s presentation, in both orientations."""
    return frozenset(_rules(context))


def defining_relations(context: GroupContext) -> list[tuple[Word, Word, str]]:
    """One ``(lhs, rhs, tag)`` per relation instance (forward orientation only)."""
    return [
        (Word(context, r.lhs), Word(context, r.rhs), r.tag)
        for r in _rules(context)
        if r.forward
    ]


class _Compiled:
    """Integer-coded alphabet and rule index for fast neighbor enumeration."""

    def __init__(self, context: GroupContext):
        self.context = context
        self.alphabet: list[Letter] = context.generators()
        self.code = {x: c for c, x in enumerate(self.alphabet)}
        self.rules = _rules(context)
        self.rule_index = {(r.lhs, r.rhs): k for k, r in enumerate(self.rules)}
        self.lhs = [tuple(self.code[x] for x in r.lhs) for r in self.rules]
        self.rhs = [tuple(self.code[x] for x in r.rhs) for r in self.rules]
        self.reverse = [self.rule_index[(r.rhs, r.lhs)] for r in self.rules]
        self.inserts = [k for k, lhs in enumerate(self.lhs) if not lhs]
        by_first: dict[int, list[int]] = {}
        for k, lhs in enumerate(self.lhs):
            if lhs:
                by_first.setdefault(lhs[0], []).append(k)
        self.by_first = by_first

    def encode(self, word: Word) -> tuple[int, ...]:
        return tuple(self.code[x] for x in word.letters)

    def decode(self, codes: Sequence[int]) -> Word:
        return Word(self.context, tuple(self.alphabet[c] for c in codes))

    def moves(self, w: tuple[int, ...]) -> Iterator[tuple[int, int, tuple[int, ...]]]:
        """Yield ``(position, rule index, result)`` for every one-step move."""
        n = len(w)
        lhs, rhs = self.lhs, self.rhs
        for pos in range(n + 1):
            head = w[:pos]
            tail = w[pos:]
            for k in self.inserts:
                yield pos, k, head + rhs[k] + tail
            if pos == n:
                break
            for k in self.by_first.get(w[pos], ()):
                l = lhs[k]
                m = len(l)
                if w[pos:pos + m] == l:
                    yield pos, k, head + rhs[k] + w[pos + m:]


@functools.lru_cache(maxsize=None)
def _compiled(context: GroupContext) -> _Compiled:
    return _Compiled(context)


def apply_step(word: Word, step: Step) -> Word:
    lhs = step.rule.lhs
    p = step.position
    if p < 0 or p > len(word) or word.letters[p:p + len(lhs)] != lhs:
        raise PatternMismatch(f"{step.rule} does not match at position {p} of {render(word)!r}")
    return Word(word.context, word.letters[:p] + step.rule.rhs + word.letters[p + len(lhs):])


def replay(word: Word, witness: Sequence[Step]) -> Word:
    """Apply each step in turn, checking that every rule belongs to the presentation."""
    rules = _compiled(word.context).rule_index
    for step in witness:
        if (step.rule.lhs, step.rule.rhs) not in rules:
            raise PatternMismatch(f"{step.rule} is not a rule of {word.context}")
        word = apply_step(word, step)
    return word


def neighbors(word: Word) -> set[Word]:
    comp = _compiled(word.context)
    return {comp.decode(res) for _, _, res in comp.moves(comp.encode(word))}


def _ordered_neighbors(comp: _Compiled, w: tuple[int, ...]) -> list[tuple[int, int, tuple[int, ...]]]:
    seen: set[tuple[int, ...]] = set()
    out = []
    for pos, k, res in comp.moves(w):
        if res not in seen:
            seen.add(res)
            out.append((pos, k, res))
    return out


@dataclass
class SearchResult:
    path: list[tuple[int, int]] | None
    explored: int
    exhausted: bool


def _bidirectional(comp: _Compiled, src, dst, max_len: int, max_states: int) -> SearchResult:
    """Breadth-first search from both ends, expanding the smaller frontier.

    ``exhausted`` is true when one side ran out of words within ``max_len``,
    so no path of bounded length exists.
    """
    if src == dst:
        return SearchResult([], 1, False)
    parents = ({src: None}, {dst: None})
    depth = ({src: 0}, {dst: 0})
    frontiers = ([src], [dst])
    while frontiers[0] and frontiers[1]:
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        mine, other = parents[side], parents[1 - side]
        other_depth = depth[1 - side]
        nxt = []
        best = None  # finish the level so the join is a shortest path
        for w in frontiers[side]:
            for pos, k, res in comp.moves(w):
                if len(res) > max_len or res in mine:
                    continue
                mine[res] = (w, pos, k)
                if res in other:
                    if best is None or other_depth[res] < other_depth[best]:
                        best = res
                    continue
                nxt.append(res)
                if len(parents[0]) + len(parents[1]) >= max_states and best is None:
                    return SearchResult(None, max_states, False)
        if best is not None:
            return SearchResult(_join(comp, parents, best), len(parents[0]) + len(parents[1]), False)
        d = depth[side]
        for res in nxt:
            d[res] = d[mine[res][0]] + 1
        frontiers = (nxt, frontiers[1]) if side == 0 else (frontiers[0], nxt)
    return SearchResult(None, len(parents[0]) + len(parents[1]), True)


def _join(comp: _Compiled, parents, meet) -> list[tuple[int, int]]:
    fwd: list[tuple[int, int]] = []
    node = meet
    while parents[0][node] is not None:
        prev, pos, k = parents[0][node]
        fwd.append((pos, k))
        node = prev
    fwd.reverse()
    node = meet
    while parents[1][node] is not None:
        prev, pos, k = parents[1][node]
        # the backward tree stores prev -> node; walk it node -> prev
        fwd.append((pos, comp.reverse[k]))
        node = prev
    return fwd


def _steps(comp: _Compiled, path: Sequence[tuple[int, int]]) -> tuple[Step, ...]:
    return tuple(Step(pos, comp.rules[k]) for pos, k in path)


def bfs_search(u: Word, v: Word, max_len: int, max_states: int) -> SearchResult:
    """Pure bounded search, no invariants and no guided descent.

    Used directly as the independent oracle in exhaustive tests.
    """
    if u.context != v.context:
        raise ContextMismatch(f"{u.context} vs {v.context}")
    comp = _compiled(u.context)
    return _bidirectional(comp, comp.encode(u), comp.encode(v), max_len, max_states)


def component(word: Word, max_len: int, max_states: int) -> set[Word] | None:
    """Every word connected to ``word`` through words of length ``<= max_len``.

    Returns ``None`` if the component has more than ``max_states`` words.
    """
    comp = _compiled(word.context)
    start = comp.encode(word)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            for _, _, res in comp.moves(w):
                if len(res) <= max_len and res not in seen:
                    seen.add(res)
                    nxt.append(res)
        if len(seen) > max_states:
            return None
        frontier = nxt
    return {comp.decode(c) for c in seen}


def _ball(comp: _Compiled, src, radius: int, max_len: int) -> dict:
    dist = {src: 0}
    frontier = [src]
    for d in range(1, radius + 1):
        nxt = []
        for w in frontier:
            for _, _, res in comp.moves(w):
                if len(res) <= max_len and res not in dist:
                    dist[res] = d
                    nxt.append(res)
        frontier = nxt
    return dist


def distance_at_most(u: Word, v: Word, radius: int, max_len: int) -> int | None:
    """Exact number of moves between ``u`` and ``v`` if it is at most ``radius``.

    Meets balls of radius ``ceil(radius/2)`` and ``floor(radius/2)``; every
    intermediate word has length ``<= max_len``.  ``None`` proves there is no
    shorter path under that length cap.
    """
    if u.context != v.context:
        raise ContextMismatch(f"{u.context} vs {v.context}")
    comp = _compiled(u.context)
    near = _ball(comp, comp.encode(u), (radius + 1) // 2, max_len)
    far = _ball(comp, comp.encode(v), radius // 2, max_len)
    meets = [near[w] + d for w, d in far.items() if w in near]
    return min(meets) if meets else None


class _Tracer:
    """A mutable word that records every rule it applies."""

    def __init__(self, word: Word):
        self.context = word.context
        self.letters: list[Letter] = list(word.letters)
        self.steps: list[Step] = []
        self._comp = _compiled(word.context)
        self.peak = len(self.letters)

    def replace(self, pos: int, lhs: tuple, rhs: tuple) -> None:
        assert tuple(self.letters[pos:pos + len(lhs)]) == lhs, (pos, lhs, self.letters)
        rule = self._comp.rules[self._comp.rule_index[(lhs, rhs)]]
        self.letters[pos:pos + len(lhs)] = rhs
        self.steps.append(Step(pos, rule))
        self.peak = max(self.peak, len(self.letters))

    def swap(self, pos: int) -> None:
        x, y = self.letters[pos], self.letters[pos + 1]
        self.replace(pos, (x, y), (y, x))

    def word(self) -> Word:
        return Word(self.context, tuple(self.letters))


def _descend_free(tr: _Tracer) -> None:
    """Cancel adjacent equal letters, leftmost first."""
    L = tr.letters
    pos = 1  # L[:pos] is reduced
    while pos < len(L):
        if L[pos - 1] == L[pos]:
            tr.replace(pos - 1, (L[pos], L[pos]), ())
            pos = max(pos - 1, 1)
        else:
            pos += 1


def _descend_dotted(tr: _Tracer) -> None:
    """Push every dot rightwards into canonical blocks.

    After this the word reads ``B_1 ... B_m t(s_1) ... t(s_r)`` with each block
    ``B_k`` either ``a(i,j)`` or ``t(i) a(i,j) t(i)`` and ``s_1 < ... < s_r``.
    A dot meeting a crossing on one of its strands is split off using
    ``t(k) a t(k) t(k)``; a pair of dots meeting a crossing passes through it.
    """
    L = tr.letters
    b = 0  # end of the finished block prefix
    p = 0  # number of pending dots, sorted, at L[b:b+p]
    while b + p < len(L):
        q = b + p
        x = L[q]
        if isinstance(x, Dot):
            pos = q
            while pos > b and L[pos - 1].i > x.i:
                tr.swap(pos - 1)
                pos -= 1
            if pos > b and L[pos - 1].i == x.i:
                tr.replace(pos - 1, (x, x), ())
                p -= 1
            else:
                p += 1
            continue
        i, j = x.i, x.j
        # relevant dots to the front of the pending run
        front = b
        for r in range(b, q):
            if L[r].i in (i, j):
                pos = r
                while pos > front:
                    tr.swap(pos - 1)
                    pos -= 1
                front += 1
        nrel = front - b
        pos = q
        while pos > front:
            tr.swap(pos - 1)
            pos -= 1
        if nrel == 0:
            b += 1
            continue
        if nrel == 1:
            d = L[b]
            tr.replace(b + 2, (), (d, d))
            if d.i == j:
                tr.replace(b, (Dot(j), x, Dot(j)), (Dot(i), x, Dot(i)))
            b += 3
            _sink(tr, b, b + p)
            continue
        # t(i) t(j) a(i,j) -> a(i,j) t(i) t(j)
        tj, ti = Dot(j), Dot(i)
        tr.replace(b + 3, (), (tj, tj))
        tr.replace(b + 1, (tj, x, tj), (ti, x, ti))
        tr.replace(b, (ti, ti), ())
        b += 1
        _sink(tr, b + 1, b + p)
        _sink(tr, b, b + p)
    _cancel_blocks(tr, b)


def _sink(tr: _Tracer, pos: int, end: int) -> None:
    """Move the dot at ``pos`` right through smaller dots in ``L[pos:end]``."""
    L = tr.letters
    while pos + 1 < end and L[pos + 1].i < L[pos].i:
        tr.swap(pos)
        pos += 1


def _cancel_blocks(tr: _Tracer, end: int) -> None:
    L = tr.letters
    blocks: list[tuple] = []
    pos = 0
    while pos < end:
        size = 3 if isinstance(L[pos], Dot) else 1
        blocks.append(tuple(L[pos:pos + size]))
        pos += size
    stack: list[tuple] = []
    at = 0  # start of the next unprocessed block in the live word
    for blk in blocks:
        if stack and stack[-1] == blk:
            start = at - len(blk)
            if len(blk) == 1:
                tr.replace(start, blk + blk, ())
            else:
                d, x, _ = blk
                tr.replace(start + 2, (d, d), ())
                tr.replace(start + 1, (x, x), ())
                tr.replace(start, (d, d), ())
            stack.pop()
            at = start
        else:
            stack.append(blk)
            at += len(blk)


def descend(word: Word) -> tuple[Word, tuple[Step, ...], int]:
    """Rewrite ``word`` to a canonical representative, recording each move.

    Returns the representative, the replayable path and the peak length seen.
    Dotted words are pushed into block form; other kinds are freely reduced.
    """
    tr = _Tracer(word)
    if word.kind is Kind.DOTTED:
        _descend_dotted(tr)
    else:
        _descend_free(tr)
    return tr.word(), tuple(tr.steps), tr.peak


def _block_offset(pw: Sequence[ParityCrossing], pos: int) -> int:
    """Position in ``phi(pw)`` where the block of ``pw[pos]`` starts."""
    return sum(3 if x.eps else 1 for x in pw[:pos])


def _block(x: ParityCrossing) -> tuple[Letter, ...]:
    c = Crossing(x.i, x.j)
    return (Dot(x.i), c, Dot(x.i)) if x.eps else (c,)


def _gather_dots(tr: _Tracer, s: int) -> None:
    """Turn ``phi`` of a triangle word with two odd bits into ``t(s) X t(s)``.

    ``s`` is the strand shared by the two odd crossings; the even crossing
    avoids ``s``, so ``t(s)`` passes through it.
    """
    L, ts = tr.letters, Dot(s)
    for q in range(len(L) - 2):
        d = L[q]
        if isinstance(d, Dot) and d.i != s and isinstance(L[q + 1], Crossing):
            x = L[q + 1]
            tr.replace(q, (d, x, d), (ts, x, ts))
    while sum(isinstance(y, Dot) for y in L) > 2:
        q = next((q for q in range(len(L) - 1) if L[q] == L[q + 1] == ts), None)
        if q is None:
            q = next(
                q for q in range(len(L) - 2)
                if L[q] == L[q + 2] == ts and s not in (L[q + 1].i, L[q + 1].j)
            )
            tr.swap(q)
            q += 1
        tr.replace(q, (ts, ts), ())
    while L[0] != ts:
        tr.swap(next(q for q in range(len(L)) if L[q] == ts) - 1)
    while L[-1] != ts:
        tr.swap(max(q for q in range(len(L)) if L[q] == ts))


def _lift_step(tr: _Tracer, pw: Sequence[ParityCrossing], pos: int, rule: RewriteRule) -> None:
    """Apply to ``phi(pw)`` the dotted moves realizing one parity rule."""
    off = _block_offset(pw, pos)
    kind = rule.tag.rsplit("-", 1)[1]
    if kind == "1":
        x = (rule.lhs or rule.rhs)[0]
        blk = _block(x)
        if rule.lhs:
            for k in reversed(range(len(blk))):
                tr.replace(off + k, (blk[k], blk[k]), ())
        else:
            for k in range(len(blk)):
                tr.replace(off + k, (), (blk[k], blk[k]))
    elif kind == "2":
        la, lb = len(_block(rule.lhs[0])), len(_block(rule.lhs[1]))
        for k in range(lb):
            for q in reversed(range(off + k, off + la + k)):
                tr.swap(q)
    else:
        odd = [x.pair for x in rule.lhs if x.eps]
        plain_lhs = tuple(Crossing(x.i, x.j) for x in rule.lhs)
        plain_rhs = plain_lhs[::-1]
        if not odd:
            tr.replace(off, plain_lhs, plain_rhs)
            return
        (s,) = set(odd[0]) & set(odd[1])
        seg = lambda w: Word(tr.context, sum((_block(x) for x in w), ()))
        fwd, back = _Tracer(seg(rule.lhs)), _Tracer(seg(rule.rhs))
        _gather_dots(fwd, s)
        _gather_dots(back, s)
        for st in fwd.steps:
            tr.replace(off + st.position, st.rule.lhs, st.rule.rhs)
        tr.replace(off + 1, plain_lhs, plain_rhs)
        for st in reversed(back.steps):
            tr.replace(off + st.position, st.rule.rhs, st.rule.lhs)


def _lift_parity_path(start: Word, pw: Word, path: Sequence[tuple[int, int]]) -> tuple[Step, ...]:
    """Dotted witness from ``start == phi(pw)`` following a parity-group path."""
    comp = _compiled(pw.context)
    tr = _Tracer(start)
    letters = list(pw.letters)
    for pos, k in path:
        rule = comp.rules[k]
        _lift_step(tr, letters, pos, rule)
        letters[pos:pos + len(rule.lhs)] = rule.rhs
    return tuple(tr.steps)


def erase_loops(start: Word, steps: Sequence[Step]) -> tuple[Step, ...]:
    """Drop every stretch of ``steps`` that returns to a word already visited."""
    cur = start.letters
    words = [cur]
    index = {cur: 0}
    out: list[Step] = []
    for st in steps:
        p, lhs = st.position, st.rule.lhs
        cur = cur[:p] + st.rule.rhs + cur[p + len(lhs):]
        k = index.get(cur)
        if k is None:
            out.append(st)
            words.append(cur)
            index[cur] = len(words) - 1
            continue
        for w in words[k + 1:]:
            del index[w]
        del words[k + 1:]
        del out[k:]
    return tuple(out)


def default_max_len(u: Word, v: Word) -> int:
    return max(len(u), len(v)) + DEFAULT_LEN_SLACK


def bounded_equiv(
    u: Word,
    v: Word,
    max_len: int | None = None,
    max_states: int = DEFAULT_MAX_STATES,
    use_invariants: bool = True,
) -> EquivVerdict:
    """Decide ``u == v`` where possible, else report ``unknown``.

    Order of work: invariant fingerprints (sole source of ``distinct``); a
    short bidirectional search for a minimal witness; a guided descent of
    both words to canonical representatives; a bounded search between those.
    """
    if u.context != v.context:
        raise ContextMismatch(f"{u.context} vs {v.context}")
    if max_len is None:
        max_len = default_max_len(u, v)
    if u.letters == v.letters:
        return EquivVerdict(EQUIVALENT, witness=())
    if use_invariants:
        from .invariants import separating_invariant

        name = separating_invariant(u, v)
        if name is not None:
            return EquivVerdict(DISTINCT, invariant=name)
    comp = _compiled(u.context)
    quick = _bidirectional(comp, comp.encode(u), comp.encode(v), max_len, min(QUICK_STATES, max_states))
    if quick.path is not None:
        return EquivVerdict(EQUIVALENT, witness=_steps(comp, quick.path), explored=quick.explored)
    explored = quick.explored
    cu, wu, _ = descend(u)
    cv, wv, _ = descend(v)
    tail = tuple(s.inverse() for s in reversed(wv))
    if cu.letters == cv.letters:
        return EquivVerdict(EQUIVALENT, witness=erase_loops(u, wu + tail), explored=explored, detail="descent")
    budget = max_states - explored
    slack = max_len - max(len(u), len(v))
    if u.kind is Kind.DOTTED and budget > 0:
        from .maps import parity_bits

        (pu, odd_u), (pv, odd_v) = parity_bits(cu), parity_bits(cv)
        if not odd_u and not odd_v:
            # both in H: search the parity group and lift each step
            pcomp = _compiled(pu.context)
            res = _bidirectional(
                pcomp, pcomp.encode(pu), pcomp.encode(pv), max(len(pu), len(pv)) + slack, budget
            )
            explored += res.explored
            budget -= res.explored
            if res.path is not None:
                return EquivVerdict(
                    EQUIVALENT,
                    witness=erase_loops(u, wu + _lift_parity_path(cu, pu, res.path) + tail),
                    explored=explored,
                    detail="descent+parity-lift",
                )
    if budget > 0:
        res = _bidirectional(
            comp, comp.encode(cu), comp.encode(cv), max(len(cu), len(cv)) + slack, budget
        )
        explored += res.explored
        if res.path is not None:
            return EquivVerdict(
                EQUIVALENT,
                witness=erase_loops(u, wu + _steps(comp, res.path) + tail),
                explored=explored,
                detail="descent+search",
            )
    return EquivVerdict(UNKNOWN, explored=explored, detail=f"max_len={max_len}, max_states={max_states}")


def bounded_trivial(
    w: Word, max_len: int | None = None, max_states: int = DEFAULT_MAX_STATES
) -> EquivVerdict:
    return bounded_equiv(w, Word.identity(w.context), max_len, max_states)


def random_walk(w: Word, steps: int, seed: int) -> Word:
    """Apply ``steps`` uniformly chosen one-step moves (seeded, deterministic)."""
    rng = random.Random(seed)
    comp = _compiled(w.context)
    codes = comp.encode(w)
    for _ in range(steps):
        options = _ordered_neighbors(comp, codes)
        if not options:
            break
        codes = options[rng.randrange(len(options))][2]
    return comp.decode(codes)


def random_move(w: Word, rng: random.Random) -> tuple[Word, Step] | None:
    """One uniformly chosen rule application (over distinct results)."""
    comp = _compiled(w.context)
    options = _ordered_neighbors(comp, comp.encode(w))
    if not options:
        return None
    pos, k, res = options[rng.randrange(len(options))]
    return comp.decode(res), Step(pos, comp.rules[k])
