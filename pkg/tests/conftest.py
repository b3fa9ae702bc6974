from __future__ import annotations

import contextlib
import random

import pytest
from hypothesis import strategies as st

from freebraid.words import GroupContext, Kind, Word, a, dotted, parity, plain, quotient, t

BETA_TEXT = "a(1,2) a(2,3) a(1,3) a(2,3) a(1,3) a(2,3) a(1,2) a(2,3)"

# (criterion number, description, passed, failure message) in execution order
CRITERIA: list[tuple[int, str, bool, str]] = []


@contextlib.contextmanager
def criterion(number: int, description: str):
    """Record a PASS/FAIL line for an acceptance criterion, re-raising failures."""
    try:
        yield
    except BaseException as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        CRITERIA.append((number, description, False, msg))
        raise
    CRITERIA.append((number, description, True, ""))


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, desc, ok, msg in sorted(CRITERIA, key=lambda c: c[0]):
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {desc}"
        if msg:
            line += f"  ({msg})"
        terminalreporter.write_line(line)


def random_letters(ctx: GroupContext, length: int, rng: random.Random):
    gens = ctx.generators()
    return tuple(rng.choice(gens) for _ in range(length)) if gens else ()


def random_word(ctx: GroupContext, max_length: int, rng: random.Random) -> Word:
    return Word(ctx, random_letters(ctx, rng.randint(0, max_length), rng))


def random_h_word(n: int, crossings: int, dots: int, rng: random.Random) -> Word:
    """Dotted word with an even number of dots on every strand."""
    ctx = dotted(n)
    pairs = ctx.pairs()
    letters = [a(*rng.choice(pairs)) for _ in range(crossings if pairs else 0)]
    pool = []
    while len(pool) + 2 <= dots:
        s = rng.randint(1, n)
        pool += [t(s), t(s)]
    for d in pool:
        letters.insert(rng.randint(0, len(letters)), d)
    return Word(ctx, tuple(letters))


CONTEXT_MAKERS = {Kind.PLAIN: plain, Kind.PARITY: parity, Kind.DOTTED: dotted, Kind.QUOTIENT: quotient}


@st.composite
def words(draw, kinds=tuple(Kind), min_n=1, max_n=4, max_length=12):
    kind = draw(st.sampled_from(list(kinds)))
    n = draw(st.integers(min_n, max_n))
    ctx = CONTEXT_MAKERS[kind](n)
    gens = ctx.generators()
    if not gens:
        return Word.identity(ctx)
    letters = draw(st.lists(st.sampled_from(gens), max_size=max_length))
    return Word(ctx, tuple(letters))


@pytest.fixture
def beta() -> Word:
    return Word.parse(BETA_TEXT, plain(3))

