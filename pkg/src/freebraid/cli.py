"""Command-line front end.

Examples::

    freebraid reduce --n 2 --kind plain "a(1,2) a(1,2)"
    freebraid equiv --n 3 "a(1,2) a(1,3) a(2,3)" "a(2,3) a(1,3) a(1,2)"
    freebraid profile --n 3 "a(1,2) a(2,3) a(1,3) a(2,3) a(1,3) a(2,3) a(1,2) a(2,3)"
    freebraid diagram-to-word "braid n=3 1 2 2 1" --format structured
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Sequence

from . import maps
from .diagram import Coloring, iota, parse_diagram
from .errors import FreeBraidError
from .invariants import brunnian_check, deletion_profile, fingerprint
from .normalform import normalize_H, normalize_H_witness
from .report import Report
from .rewriting import (
    DEFAULT_LEN_SLACK,
    DEFAULT_MAX_STATES,
    bounded_equiv,
    bounded_trivial,
    random_walk,
)
from .words import GroupContext, Kind, Word, involutive_reduce, parse, render

KINDS = [k.value for k in Kind]


def _common(p: argparse.ArgumentParser, kind: bool = True, n: bool = True) -> None:
    if n:
        p.add_argument("--n", type=int, required=True, help="strand count")
    if kind:
        p.add_argument("--kind", choices=KINDS, default="plain")
    p.add_argument("--format", choices=["text", "structured"], default="text")
    p.add_argument("--max-len", type=int, default=None,
                   help=f"longest word the search visits (default: longest input + {DEFAULT_LEN_SLACK})")
    p.add_argument("--max-states", type=int, default=DEFAULT_MAX_STATES)
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="freebraid", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="cancel adjacent equal generators")
    _common(p)
    p.add_argument("word")

    p = sub.add_parser("equiv", help="bounded equivalence check of two words")
    _common(p)
    p.add_argument("u")
    p.add_argument("v")

    p = sub.add_parser("trivial", help="bounded triviality check")
    _common(p)
    p.add_argument("word")

    p = sub.add_parser("map", help="apply a homomorphism: " + ", ".join(maps.MAP_NAMES))
    _common(p, kind=False)
    p.add_argument("name")
    p.add_argument("word")

    p = sub.add_parser("invariants", help="class fingerprint of a word")
    _common(p)
    p.add_argument("word")

    p = sub.add_parser("normalize", help="block normal form of a dotted word in H")
    _common(p, kind=False)
    p.add_argument("--witness", action="store_true", help="include the dot-pushing rewrite path")
    p.add_argument("word")

    p = sub.add_parser("profile", help="strand-deletion profile of a plain word")
    _common(p, kind=False)
    p.add_argument("word")

    p = sub.add_parser("brunnian", help="Brunnian candidacy and nontriviality certificate")
    _common(p, kind=False)
    p.add_argument("word")

    p = sub.add_parser("diagram-to-word", help="word of a colored pure diagram")
    _common(p, kind=False, n=False)
    p.add_argument("diagram", help="'braid n=<n> <events...>' text, or @file")
    p.add_argument("--coloring", default=None, help="comma-separated component numbers")

    p = sub.add_parser("walk", help="seeded random walk by rule applications")
    _common(p)
    p.add_argument("--steps", type=int, default=10)
    p.add_argument("word")
    return parser


def _ctx(args, kind: Kind | str | None = None) -> GroupContext:
    return GroupContext(args.n, Kind(kind or args.kind))


def _run(args, report: Report) -> str:
    """Fill ``report`` and return the human-readable summary."""
    cmd = args.command
    bounds = dict(max_len=args.max_len, max_states=args.max_states)

    if cmd == "diagram-to-word":
        text = args.diagram
        if text.startswith("@"):
            with open(text[1:]) as fh:
                text = fh.read()
        d = parse_diagram(text)
        coloring = None
        if args.coloring:
            coloring = Coloring(tuple(int(c) for c in args.coloring.split(",")))
        w = iota(d, coloring)
        report.context = {"n": d.n, "kind": "plain"}
        report.inputs = {"diagram": d.to_dict(coloring)}
        report.outputs = {"word": render(w)}
        return render(w)

    if cmd == "map":
        ctx = maps.source_context(args.name, args.n)
        w = parse(args.word, ctx)
        image = maps.apply_named(args.name, w)
        report.context = {"n": ctx.n, "kind": ctx.kind.value}
        report.inputs = {"map": args.name, "word": render(w)}
        report.outputs = {"word": render(image), "context": {"n": image.n, "kind": image.kind.value}}
        return render(image)

    if cmd in ("normalize",):
        ctx = _ctx(args, Kind.DOTTED)
    elif cmd in ("profile", "brunnian"):
        ctx = _ctx(args, Kind.PLAIN)
    else:
        ctx = _ctx(args)
    report.context = {"n": ctx.n, "kind": ctx.kind.value}

    if cmd == "equiv":
        u, v = parse(args.u, ctx), parse(args.v, ctx)
        report.inputs = {"u": render(u), "v": render(v), "bounds": bounds}
        verdict = bounded_equiv(u, v, **bounds)
        report.outputs = verdict.to_dict()
        report.verdict = verdict.status
        return _verdict_text(verdict)

    w = parse(args.word, ctx)
    report.inputs = {"word": render(w)}

    if cmd == "reduce":
        r = involutive_reduce(w)
        report.outputs = {"word": render(r)}
        return render(r)
    if cmd == "trivial":
        report.inputs["bounds"] = bounds
        verdict = bounded_trivial(w, **bounds)
        report.outputs = verdict.to_dict()
        report.verdict = verdict.status
        return _verdict_text(verdict)
    if cmd == "invariants":
        fp = fingerprint(w)
        report.outputs = fp.to_dict()
        return "\n".join(f"{k}: {v}" for k, v in fp.to_dict().items())
    if cmd == "normalize":
        if args.witness:
            bw, steps = normalize_H_witness(w)
            report.outputs = {"blocks": bw.to_list(), "witness": [s.to_dict() for s in steps]}
        else:
            bw = normalize_H(w)
            report.outputs = {"blocks": bw.to_list()}
        return " ".join(f"({i},{j},{e})" for i, j, e in bw.to_list())
    if cmd == "profile":
        report.inputs["bounds"] = bounds
        prof = deletion_profile(w, **bounds)
        report.outputs = prof.to_dict()
        lines = []
        for e in prof.entries.values():
            chi_txt = render(e.chi_image) if e.chi_image is not None else "-"
            lines.append(f"m={e.m}: psi={render(e.psi_image)} | in_H={int(e.in_H)} | chi={chi_txt} | {e.verdict}")
        return "\n".join(lines)
    if cmd == "brunnian":
        report.inputs["bounds"] = bounds
        rep = brunnian_check(w, **bounds)
        report.outputs = rep.to_dict()
        report.verdict = rep.self_verdict
        lines = [f"m={m}: residual={render(r) or '1'} -> {v}" for m, (r, v) in rep.deletions.items()]
        if rep.certificate is not None:
            lines.append(f"certificate: m={rep.certificate.m}, chi={render(rep.certificate.chi_image)}")
        lines.append(rep.status)
        return "\n".join(lines)
    if cmd == "walk":
        r = random_walk(w, args.steps, args.seed)
        report.inputs.update(steps=args.steps, seed=args.seed)
        report.outputs = {"word": render(r)}
        return render(r)
    raise AssertionError(cmd)  # pragma: no cover


def _verdict_text(v) -> str:
    if v.is_equivalent:
        return f"equivalent ({len(v.witness)} moves)"
    if v.is_distinct:
        return f"distinct (invariant: {v.invariant})"
    return f"unknown ({v.detail})"


def run(argv: Sequence[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)  # exits with 2 on usage errors
    report = Report(command=args.command, argv=argv)
    start = time.perf_counter()
    code = 0
    try:
        summary = _run(args, report)
    except (FreeBraidError, ValueError) as exc:
        report.error = {"type": type(exc).__name__, "message": str(exc)}
        summary = f"error: {type(exc).__name__}: {exc}"
        code = 1
    report.timing = {"seconds": round(time.perf_counter() - start, 6)}
    if args.format == "structured":
        print(report.to_json(), file=stdout)
    else:
        print(summary, file=stdout if code == 0 else sys.stderr)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
