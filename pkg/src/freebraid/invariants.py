"""Class invariants, strand-deletion profiles and Brunnian detection.

A fingerprint bundles quantities that do not change under any rewrite rule
of the word's presentation:

* ``generator-parity``: occurrence count of each generator mod 2.  Every
  relation either deletes two equal letters or permutes letters.
* ``h-membership``: dotted words only, whether every strand carries an even
  number of dots.
* ``pair-profiles``: for parity words, the reduced two-strand projection on
  each strand pair.  Dotted words use the parity word obtained by reading
  off dot parities before each crossing, which is constant on classes.
* ``deletion-profiles``: for plain and quotient words, the pair profiles of
  every strand deletion (only the distinguished strand for quotients).

Two words with different fingerprints are different group elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ContextMismatch
from .maps import chi, dot_counts, forget_dots, in_H, parity_bits, psi_m
from .normalform import pair_profiles, z2z2_reduce
from .rewriting import (
    DEFAULT_MAX_STATES,
    EQUIVALENT,
    DISTINCT,
    UNKNOWN,
    EquivVerdict,
    bounded_trivial,
)
from .words import Kind, Letter, Word, render

TRIVIAL = "trivial"
NONTRIVIAL = "nontrivial"

FINGERPRINT_COMPONENTS = ("generator-parity", "h-membership", "pair-profiles", "deletion-profiles")


def generator_parity(w: Word) -> dict[Letter, int]:
    bits = {x: 0 for x in w.context.generators()}
    for x in w:
        bits[x] ^= 1
    return bits


def _profiles_key(profiles: dict) -> tuple:
    return tuple((pair, nf.letters) for pair, nf in sorted(profiles.items()))


def _pair_component(w: Word) -> dict | None:
    if w.kind is Kind.PARITY:
        return pair_profiles(w)
    if w.kind is Kind.DOTTED:
        return pair_profiles(parity_bits(w)[0])
    return None


def _deletion_component(w: Word) -> dict | None:
    if w.kind is Kind.PLAIN and w.n >= 2:
        strands = range(1, w.n + 1)
    elif w.kind is Kind.QUOTIENT and w.n >= 2:
        strands = [w.n]
    else:
        return None
    return {m: pair_profiles(parity_bits(psi_m(w, m))[0]) for m in strands}


@dataclass(frozen=True)
class Fingerprint:
    generator_parity: dict[Letter, int]
    h_membership: int | None = None
    pair_profiles: dict[tuple[int, int], Word] | None = None
    deletion_profiles: dict[int, dict[tuple[int, int], Word]] | None = None

    def component(self, name: str):
        if name == "generator-parity":
            return tuple(sorted(self.generator_parity.items(), key=lambda kv: str(kv[0])))
        if name == "h-membership":
            return self.h_membership
        if name == "pair-profiles":
            return None if self.pair_profiles is None else _profiles_key(self.pair_profiles)
        if name == "deletion-profiles":
            if self.deletion_profiles is None:
                return None
            return tuple((m, _profiles_key(p)) for m, p in sorted(self.deletion_profiles.items()))
        raise KeyError(name)

    def to_dict(self) -> dict:
        out: dict = {
            "generator_parity": {str(x): b for x, b in self.generator_parity.items()},
        }
        if self.h_membership is not None:
            out["h_membership"] = self.h_membership
        if self.pair_profiles is not None:
            out["pair_profiles"] = {f"{i},{j}": render(nf) for (i, j), nf in self.pair_profiles.items()}
        if self.deletion_profiles is not None:
            out["deletion_profiles"] = {
                str(m): {f"{i},{j}": render(nf) for (i, j), nf in prof.items()}
                for m, prof in self.deletion_profiles.items()
            }
        return out


def fingerprint(w: Word) -> Fingerprint:
    h = None
    if w.kind is Kind.DOTTED:
        h = int(in_H(w))
    return Fingerprint(
        generator_parity=generator_parity(w),
        h_membership=h,
        pair_profiles=_pair_component(w),
        deletion_profiles=_deletion_component(w),
    )


_COMPONENT_FNS = {
    "generator-parity": lambda w: Fingerprint(generator_parity(w)).component("generator-parity"),
    "h-membership": lambda w: int(in_H(w)) if w.kind is Kind.DOTTED else None,
    "pair-profiles": lambda w: Fingerprint({}, pair_profiles=_pair_component(w)).component("pair-profiles"),
    "deletion-profiles": lambda w: Fingerprint(
        {}, deletion_profiles=_deletion_component(w)
    ).component("deletion-profiles"),
}


def separating_invariant(u: Word, v: Word) -> str | None:
    """Name of the first fingerprint component on which ``u`` and ``v`` differ."""
    for name in FINGERPRINT_COMPONENTS:
        fn = _COMPONENT_FNS[name]
        if fn(u) != fn(v):
            return name
    return None


@dataclass(frozen=True)
class DeletionEntry:
    m: int
    psi_image: Word
    in_H: bool
    chi_image: Word | None
    verdict: str
    reduced: Word | None = None
    evidence: str | None = None

    def to_dict(self) -> dict:
        out = {
            "m": self.m,
            "psi_image": render(self.psi_image),
            "dot_counts": {str(k): c for k, c in dot_counts(self.psi_image).items()},
            "in_H": self.in_H,
            "verdict": self.verdict,
        }
        if self.chi_image is not None:
            out["chi_image"] = render(self.chi_image)
        if self.reduced is not None:
            out["reduced"] = render(self.reduced)
        if self.evidence is not None:
            out["evidence"] = self.evidence
        return out


@dataclass(frozen=True)
class DeletionProfile:
    word: Word
    entries: dict[int, DeletionEntry] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"word": render(self.word), "entries": [e.to_dict() for e in self.entries.values()]}


def _verdict(v: EquivVerdict) -> str:
    return {EQUIVALENT: TRIVIAL, DISTINCT: NONTRIVIAL, UNKNOWN: UNKNOWN}[v.status]


def _require_deletable(w: Word) -> None:
    if w.kind is not Kind.PLAIN:
        raise ContextMismatch(f"strand deletion expects a plain word, got {w.context}")
    if w.n < 2:
        raise ContextMismatch("strand deletion needs at least two strands")


def _decide_parity(c: Word, max_len, max_states) -> tuple[str, Word | None, str | None]:
    """Triviality of a parity word: exact on two strands, semi-decided above."""
    if c.n == 1:
        return TRIVIAL, c, "no generators"
    if c.n == 2:
        nf = z2z2_reduce(c)
        return (NONTRIVIAL if nf.letters else TRIVIAL), nf, "z2z2-normal-form"
    v = bounded_trivial(c, max_len, max_states)
    return _verdict(v), None, v.invariant or v.detail or None


def deletion_profile(
    w: Word, max_len: int | None = None, max_states: int = DEFAULT_MAX_STATES
) -> DeletionProfile:
    _require_deletable(w)
    entries = {}
    for m in range(1, w.n + 1):
        d = psi_m(w, m)
        if not in_H(d):
            entries[m] = DeletionEntry(m, d, False, None, UNKNOWN, evidence="not in H")
            continue
        c = chi(d)
        verdict, reduced, evidence = _decide_parity(c, max_len, max_states)
        entries[m] = DeletionEntry(m, d, True, c, verdict, reduced, evidence)
    return DeletionProfile(w, entries)


@dataclass(frozen=True)
class Certificate:
    """Replayable evidence that a plain word is not the identity.

    Chain: delete strand ``m`` (psi_m), read off parities (chi), then show the
    parity word is nontrivial (``evidence``).
    """

    word: Word
    m: int
    psi_image: Word
    chi_image: Word
    reduced: Word | None
    evidence: str

    chain = ("psi_m", "chi", "nontriviality")

    def to_dict(self) -> dict:
        out = {
            "word": render(self.word),
            "m": self.m,
            "chain": [f"psi_{self.m}", "chi", self.evidence],
            "psi_image": render(self.psi_image),
            "chi_image": render(self.chi_image),
            "evidence": self.evidence,
        }
        if self.reduced is not None:
            out["reduced_chi"] = render(self.reduced)
        return out


def certify_nontrivial(
    w: Word, max_len: int | None = None, max_states: int = DEFAULT_MAX_STATES
) -> Certificate | None:
    profile = deletion_profile(w, max_len, max_states)
    for m, e in profile.entries.items():
        if e.in_H and e.verdict == NONTRIVIAL:
            return Certificate(w, m, e.psi_image, e.chi_image, e.reduced, e.evidence)
    return None


def verify_certificate(cert: Certificate) -> bool:
    """Recompute every link of the chain from the certified word."""
    d = psi_m(cert.word, cert.m)
    if d.letters != cert.psi_image.letters or not in_H(d):
        return False
    c = chi(d)
    if c.letters != cert.chi_image.letters:
        return False
    if c.n == 2:
        return bool(z2z2_reduce(c).letters)
    return separating_invariant(c, Word.identity(c.context)) is not None


@dataclass(frozen=True)
class BrunnianReport:
    word: Word
    deletions: dict[int, tuple[Word, str]]
    candidate: bool | None
    certificate: Certificate | None
    self_verdict: str

    @property
    def status(self) -> str:
        if self.candidate is None:
            cand = "undecided Brunnian candidacy"
        elif self.candidate:
            cand = "Brunnian candidate"
        else:
            cand = "not Brunnian"
        return f"{cand}, {self.self_verdict}"

    def to_dict(self) -> dict:
        return {
            "word": render(self.word),
            "deletions": [
                {"m": m, "residual": render(r), "verdict": v} for m, (r, v) in self.deletions.items()
            ],
            "brunnian_candidate": self.candidate,
            "self_verdict": self.self_verdict,
            "certificate": None if self.certificate is None else self.certificate.to_dict(),
            "status": self.status,
        }


def brunnian_check(
    w: Word, max_len: int | None = None, max_states: int = DEFAULT_MAX_STATES
) -> BrunnianReport:
    """Is every one-strand deletion trivial, and is the braid itself nontrivial?"""
    _require_deletable(w)
    deletions = {}
    for m in range(1, w.n + 1):
        residual = forget_dots(psi_m(w, m))
        verdict = _verdict(bounded_trivial(residual, max_len, max_states))
        deletions[m] = (residual, verdict)
    verdicts = [v for _, v in deletions.values()]
    if NONTRIVIAL in verdicts:
        candidate: bool | None = False
    elif all(v == TRIVIAL for v in verdicts):
        candidate = True
    else:
        candidate = None
    cert = certify_nontrivial(w, max_len, max_states)
    if cert is not None:
        self_verdict = NONTRIVIAL
    else:
        self_verdict = _verdict(bounded_trivial(w, max_len, max_states))
    return BrunnianReport(w, deletions, candidate, cert, self_verdict)
