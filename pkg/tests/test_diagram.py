import random
from functools import reduce

import pytest
from hypothesis import given, strategies as st

from freebraid.diagram import (
    ArtinMove,
    BraidDiagram,
    Coloring,
    applicable_moves,
    apply_artin_move,
    iota,
    is_pure,
    parse_diagram,
    permutation,
)
from freebraid.errors import EventOutOfRange, InvalidColoring, NotPure, PatternMismatch, WordSyntaxError
from freebraid.rewriting import EQUIVALENT, bounded_equiv
from freebraid.words import parse, plain


def _transposition(n, p):
    perm = list(range(n))
    perm[p - 1], perm[p] = perm[p], perm[p - 1]
    return tuple(perm)


def _oracle_permutation(n, events):
    """Compose position transpositions as tuples (independent of the library)."""
    compose = lambda f, g: tuple(f[g[k]] for k in range(n))
    total = reduce(compose, [_transposition(n, p) for p in events], tuple(range(n)))
    return tuple(k + 1 for k in total)


diagrams = st.integers(2, 5).flatmap(
    lambda n: st.builds(BraidDiagram, st.just(n), st.lists(st.integers(1, n - 1), max_size=12))
)


class TestPermutation:
    def test_examples(self):
        assert permutation(BraidDiagram(3)) == (1, 2, 3)
        assert permutation(BraidDiagram(2, (1, 1))) == (1, 2)
        assert permutation(BraidDiagram(3, (1,))) == (2, 1, 3)

    def test_event_range(self):
        with pytest.raises(EventOutOfRange):
            BraidDiagram(3, (3,))
        with pytest.raises(EventOutOfRange):
            BraidDiagram(3, (0,))

    @given(diagrams)
    def test_matches_oracle(self, d):
        assert permutation(d) == _oracle_permutation(d.n, d.events)

    @given(diagrams, st.data())
    def test_homomorphism(self, d, data):
        e = BraidDiagram(d.n, data.draw(st.lists(st.integers(1, d.n - 1), max_size=8)))
        pd, pe = permutation(d), permutation(e)
        assert permutation(d + e) == tuple(pd[q - 1] for q in pe)


class TestPure:
    def test_examples(self):
        assert is_pure(BraidDiagram(3))
        assert not is_pure(BraidDiagram(2, (1,)))
        d = BraidDiagram(3, (1, 2, 1, 2, 1, 2))
        assert is_pure(d)
        assert _oracle_permutation(3, d.events) == (1, 2, 3)


class TestIota:
    def test_examples(self):
        assert iota(BraidDiagram(3)) == parse("", plain(3))
        assert iota(BraidDiagram(2, (1, 1))) == parse("a(1,2) a(1,2)", plain(2))
        assert iota(BraidDiagram(3, (1, 2, 2, 1))) == parse("a(1,2) a(1,3) a(1,3) a(1,2)", plain(3))

    def test_coloring_relabels(self):
        d = BraidDiagram(3, (1, 2, 2, 1))
        assert iota(d, Coloring((3, 1, 2))) == parse("a(1,3) a(2,3) a(2,3) a(1,3)", plain(3))

    def test_not_pure(self):
        with pytest.raises(NotPure):
            iota(BraidDiagram(2, (1,)))

    def test_bad_coloring(self):
        with pytest.raises(InvalidColoring):
            Coloring((1, 1, 2))
        with pytest.raises(InvalidColoring):
            iota(BraidDiagram(3), Coloring((1, 2)))

    @given(diagrams)
    def test_length(self, d):
        pure = d + BraidDiagram(d.n, tuple(reversed(d.events)))
        assert len(iota(pure)) == len(pure)


class TestArtinMoves:
    def test_examples(self):
        assert apply_artin_move(BraidDiagram(2), ArtinMove("insert", 0, 1)).events == (1, 1)
        assert apply_artin_move(BraidDiagram(4, (1, 3)), ArtinMove("commute", 0)).events == (3, 1)
        assert apply_artin_move(BraidDiagram(3, (1, 2, 1)), ArtinMove("triangle", 0)).events == (2, 1, 2)
        assert apply_artin_move(BraidDiagram(3, (2, 2, 1)), ArtinMove("delete", 0)).events == (1,)

    @pytest.mark.parametrize(
        "d, move",
        [
            (BraidDiagram(3, (1, 2)), ArtinMove("commute", 0)),
            (BraidDiagram(3, (1, 2)), ArtinMove("delete", 0)),
            (BraidDiagram(3, (1, 2, 2)), ArtinMove("triangle", 0)),
            (BraidDiagram(3, (1,)), ArtinMove("insert", 5, 1)),
            (BraidDiagram(3, (1,)), ArtinMove("twist", 0)),
        ],
    )
    def test_pattern_mismatch(self, d, move):
        with pytest.raises(PatternMismatch):
            apply_artin_move(d, move)

    def test_moves_preserve_permutation(self):
        rng = random.Random(1)
        for _ in range(200):
            n = rng.randint(2, 4)
            d = BraidDiagram(n, tuple(rng.randint(1, n - 1) for _ in range(rng.randint(0, 8))))
            for move in applicable_moves(d):
                assert permutation(apply_artin_move(d, move)) == permutation(d)

    def test_iota_functorial(self):
        d = BraidDiagram(3, (1, 2, 1, 1, 2, 1))
        for move in applicable_moves(d):
            v = bounded_equiv(iota(d), iota(apply_artin_move(d, move)))
            assert v.status == EQUIVALENT and len(v.witness) <= 1


class TestText:
    def test_parse(self):
        d = parse_diagram("braid n=3\n1 2 2 1")
        assert d == BraidDiagram(3, (1, 2, 2, 1))
        assert parse_diagram(d.to_text()) == d

    def test_parse_errors(self):
        with pytest.raises(WordSyntaxError):
            parse_diagram("n=3 1 2")
        with pytest.raises(WordSyntaxError):
            parse_diagram("braid n=3 1 x")

    def test_to_dict(self):
        d = BraidDiagram(3, (1, 1))
        assert d.to_dict(Coloring.identity(3)) == {"n": 3, "events": [1, 1], "coloring": [1, 2, 3]}
