import random

import pytest

from freebraid.errors import ContextMismatch
from freebraid.invariants import (
    FINGERPRINT_COMPONENTS,
    NONTRIVIAL,
    TRIVIAL,
    UNKNOWN,
    brunnian_check,
    certify_nontrivial,
    deletion_profile,
    fingerprint,
    separating_invariant,
    verify_certificate,
)
from freebraid.maps import psi_m
from freebraid.normalform import z2z2_reduce
from freebraid.rewriting import bfs_search, random_move
from freebraid.words import Kind, Word, dotted, parity, parse, plain, quotient

from conftest import CONTEXT_MAKERS, random_word

CHI_BETA = {
    1: "a(1,2;1) a(1,2;0) a(1,2;1) a(1,2;0)",
    2: "a(1,2;0) a(1,2;1)",
    3: "a(1,2;0) a(1,2;1)",
}


class TestFingerprint:
    def test_examples(self):
        fp = fingerprint(parse("a(1,2) a(1,2)", plain(2)))
        assert set(fp.generator_parity.values()) == {0}
        alt = parse("a(1,2;1) a(1,2;0) a(1,2;1) a(1,2;0)", parity(2))
        assert fingerprint(alt).pair_profiles[(1, 2)] == alt
        assert fingerprint(parse("t(1)", dotted(2))).h_membership == 0

    def test_components_by_kind(self):
        assert fingerprint(Word.identity(plain(3))).pair_profiles is None
        assert fingerprint(Word.identity(plain(3))).deletion_profiles is not None
        assert fingerprint(Word.identity(parity(3))).deletion_profiles is None
        assert fingerprint(Word.identity(dotted(3))).pair_profiles is not None
        assert set(fingerprint(Word.identity(quotient(3))).deletion_profiles) == {3}

    def test_deterministic(self):
        w = parse("t(1) a(1,2) t(2) a(2,3)", dotted(3))
        assert fingerprint(w) == fingerprint(w)
        assert fingerprint(w).to_dict() == fingerprint(w).to_dict()

    @pytest.mark.parametrize("kind", list(Kind))
    def test_constant_under_one_move(self, kind):
        rng = random.Random(hash(kind.value) & 0xFFFF)
        for _ in range(1000):
            w = random_word(CONTEXT_MAKERS[kind](rng.randint(1, 4)), 10, rng)
            moved = random_move(w, rng)
            if moved is None:
                continue
            v, step = moved
            assert fingerprint(v) == fingerprint(w), (w, step)

    def test_separating_invariant_names(self):
        ctx = plain(3)
        assert separating_invariant(parse("a(1,2)", ctx), Word.identity(ctx)) == "generator-parity"
        u = parse("a(1,2;1) a(1,2;0)", parity(2))
        assert separating_invariant(u, parse("a(1,2;0) a(1,2;1)", parity(2))) == "pair-profiles"
        assert separating_invariant(u, u) is None
        assert set(FINGERPRINT_COMPONENTS) == {
            "generator-parity", "h-membership", "pair-profiles", "deletion-profiles"
        }

    def test_distinct_is_sound(self):
        """Separated pairs are never joined by exhaustive search to length 8."""
        rng = random.Random(8)
        seen = 0
        while seen < 100:
            kind = rng.choice(list(Kind))
            ctx = CONTEXT_MAKERS[kind](rng.randint(2, 3))
            u, v = random_word(ctx, 4, rng), random_word(ctx, 4, rng)
            if separating_invariant(u, v) is None:
                continue
            res = bfs_search(u, v, max_len=8, max_states=3_000_000)
            assert res.path is None, (u, v)
            seen += 1


class TestDeletionProfile:
    def test_beta(self, beta):
        prof = deletion_profile(beta)
        for m, text in CHI_BETA.items():
            e = prof.entries[m]
            assert e.in_H
            assert e.chi_image == parse(text, parity(2))
            assert e.verdict == NONTRIVIAL

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_identity(self, n):
        prof = deletion_profile(Word.identity(plain(n)))
        assert set(prof.entries) == set(range(1, n + 1))
        for e in prof.entries.values():
            assert e.in_H and e.chi_image.letters == () and e.verdict == TRIVIAL

    def test_single_crossing(self):
        prof = deletion_profile(parse("a(1,3)", plain(3)))
        e = prof.entries[2]
        assert e.psi_image == parse("a(1,2)", dotted(2))
        assert e.in_H and e.chi_image == parse("a(1,2;0)", parity(2))
        assert e.verdict == NONTRIVIAL
        # oracle: the two-strand normal form is nonempty
        assert z2z2_reduce(e.chi_image).letters
        assert not prof.entries[1].in_H and prof.entries[1].chi_image is None
        assert prof.entries[1].verdict == UNKNOWN

    def test_chi_present_iff_in_H(self):
        rng = random.Random(9)
        for _ in range(50):
            prof = deletion_profile(random_word(plain(3), 8, rng))
            for e in prof.entries.values():
                assert (e.chi_image is not None) == e.in_H

    def test_requires_plain(self):
        with pytest.raises(ContextMismatch):
            deletion_profile(Word.identity(dotted(3)))


class TestCertificates:
    def test_beta(self, beta):
        cert = certify_nontrivial(beta)
        assert cert is not None and cert.m == 1
        assert verify_certificate(cert)
        d = cert.to_dict()
        assert d["chain"][0] == "psi_1" and d["chi_image"] == CHI_BETA[1]

    def test_identity(self):
        assert certify_nontrivial(Word.identity(plain(3))) is None

    def test_square(self):
        w = parse("a(1,2) a(1,2)", plain(3))
        assert certify_nontrivial(w) is None
        # oracle: every strand deletion is trivial by bounded search
        for m in (1, 2, 3):
            d = psi_m(w, m)
            assert bfs_search(d, Word.identity(d.context), len(d) + 6, 10**5).path is not None

    def test_tampered_certificate_fails(self, beta):
        cert = certify_nontrivial(beta)
        bad = type(cert)(beta, 2, cert.psi_image, cert.chi_image, cert.reduced, cert.evidence)
        assert not verify_certificate(bad)

    def test_never_certifies_empty_reduction(self):
        rng = random.Random(10)
        for _ in range(200):
            cert = certify_nontrivial(random_word(plain(3), 8, rng))
            if cert is not None:
                assert z2z2_reduce(cert.chi_image).letters


class TestBrunnian:
    def test_beta(self, beta):
        rep = brunnian_check(beta)
        assert rep.candidate is True
        assert [v for _, v in rep.deletions.values()] == [TRIVIAL] * 3
        assert rep.certificate.m == 1
        assert rep.self_verdict == NONTRIVIAL
        assert rep.status == "Brunnian candidate, nontrivial"

    def test_identity(self):
        rep = brunnian_check(Word.identity(plain(3)))
        assert rep.candidate is True and rep.certificate is None
        assert rep.status == "Brunnian candidate, trivial"

    def test_single_crossing_not_brunnian(self):
        rep = brunnian_check(parse("a(1,2)", plain(3)))
        assert rep.candidate is False
        residual, verdict = rep.deletions[3]
        assert residual == parse("a(1,2)", plain(2)) and verdict == NONTRIVIAL
        assert rep.status.startswith("not Brunnian")

    def test_to_dict(self, beta):
        d = brunnian_check(beta).to_dict()
        assert d["brunnian_candidate"] is True
        assert d["certificate"]["m"] == 1
