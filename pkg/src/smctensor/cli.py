"""Command-line entry point: ``smctensor <command> ...``.

Exit codes: 0 success or Equal, 1 failed check or Distinct, 2 usage or
input error, 3 Unknown.
"""

from __future__ import annotations

import argparse
import sys
from importlib import resources
from pathlib import Path as FilePath

from . import corpus
from .fincat import CategoryError
from .homcat import build_hom_smc, enumerate_smc_functors
from .monoidal import validate_smc
from .presentation import PresentationError, emit_presentation, format_atom, parse_path, parse_presentation, \
    parse_word
from .adjoin import en_extend
from .tenspres import Distinct, Equal, TenSmc, Unknown, decide_chain
from .words import PathError, canonical_path, match_leaves

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNKNOWN = 0, 1, 2, 3


class InputError(Exception):
    pass


def fixture_path(name: str) -> FilePath:
    return FilePath(str(resources.files("smctensor") / "fixtures" / f"{name}.smc"))


def load(where: str, validate: bool = True):
    """A presentation file, or the name of a shipped fixture such as ``z2``."""
    path = FilePath(where)
    if not path.exists() and fixture_path(where).exists():
        path = fixture_path(where)
    try:
        return parse_presentation(path, validate)
    except PresentationError as exc:
        raise InputError(str(exc)) from None


def _label(s) -> str:
    return s.name or "?"


# ---------------------------------------------------------------- commands

def cmd_check(args, out) -> int:
    s = load(args.file, validate=False)
    report = validate_smc(s)
    out.write(f"{_label(s)}: {len(s.base.objects)} objects, {len(s.base.arrows)} arrows, unit {format_atom(s.unit)}\n")
    if not report:
        out.write("all SMC axioms hold\n")
        return EXIT_OK
    for v in report:
        out.write(f"violation: {v}\n")
    return EXIT_FAIL


def cmd_hom(args, out) -> int:
    a, b = load(args.file_a), load(args.file_b)
    h = build_hom_smc(a, b)
    base = h.smc.base
    out.write(f"[{_label(a)}, {_label(b)}]: {len(h.functors)} objects, {len(h.trans)} arrows, "
              f"unit {h.smc.unit}\n")
    for i, f in enumerate(h.functors):
        objs = " ".join(f"{format_atom(x)}->{format_atom(f.on_obj(x))}" for x in a.base.objects)
        arrs = " ".join(f"{format_atom(g)}->{format_atom(f.on_arr(g))}" for g in a.base.arrows)
        f2 = " ".join(f"{format_atom(x)},{format_atom(y)}->{format_atom(f.f2[(x, y)])}"
                      for x in a.base.objects for y in a.base.objects)
        out.write(f"  F{i}: objects {objs}; arrows {arrs}; F0 {format_atom(f.f0)}; F2 {f2}\n")
    for i in base.objects:
        row = [len(base.hom(i, k)) for k in base.objects]
        out.write(f"  hom(F{i}, -): {' '.join(map(str, row))}\n")
    return EXIT_OK


def _extensions(a, b, into, selection: str):
    if into is None:
        if selection not in ("", "none"):
            raise InputError("--extensions needs --into")
        return []
    c = load(into)
    hbc = build_hom_smc(b, c)
    fs = enumerate_smc_functors(a, hbc.smc)
    if selection in ("", "all"):
        chosen = range(len(fs))
    elif selection == "none":
        chosen = []
    else:
        try:
            chosen = [int(k) for k in selection.split(",")]
        except ValueError:
            raise InputError(f"bad --extensions list {selection!r}") from None
        bad = [k for k in chosen if not 0 <= k < len(fs)]
        if bad:
            raise InputError(f"extension index {bad[0]} out of range (0..{len(fs) - 1})")
    tp = TenSmc(a, b)
    out = []
    for k in chosen:
        ext = en_extend(fs[k], hbc, tp)
        ext.name = f"En(F{k})"
        out.append(ext)
    return out


def cmd_tensor_eq(args, out) -> int:
    a, b = load(args.file_a), load(args.file_b)
    tp = TenSmc(a, b)
    try:
        paths = [parse_path(t, tp) for t in [args.path1] + list(args.via or []) + [args.path2]]
    except (PathError, ValueError) as exc:
        raise InputError(f"cannot read path: {exc}") from None
    for p, q in zip(paths, paths[1:]):
        if p.dom is not q.dom or p.cod is not q.cod:
            out.write(f"endpoint mismatch: {p.dom!r} -> {p.cod!r} vs {q.dom!r} -> {q.cod!r}\n")
            return EXIT_USAGE
    exts = _extensions(a, b, args.into, args.extensions)
    out.write(f"in {_label(a)} (x) {_label(b)}: {paths[0].dom!r} -> {paths[0].cod!r}\n")
    out.write(f"  lhs: {paths[0]!r}\n  rhs: {paths[-1]!r}\n")
    if len(paths) > 2:
        out.write(f"  through {len(paths) - 2} waypoints\n")
    out.write(f"  budget {args.budget}, {len(exts)} extensions\n")
    v = decide_chain(paths, args.budget, exts, tp, normalize_first=args.normalize)
    if isinstance(v, Equal):
        out.write(f"Equal: {len(v.witness.steps)} steps\n")
        for i, st in enumerate(v.witness.steps, 1):
            out.write(f"  {i}. {st.rule} at {st.position}: {st.target!r}\n")
        return EXIT_OK
    if isinstance(v, Distinct):
        out.write(f"Distinct: {v.name} sends the sides to {format_atom(v.left)} and {format_atom(v.right)}\n")
        return EXIT_FAIL
    assert isinstance(v, Unknown)
    out.write(f"Unknown: budget exhausted after {v.spent} expansions\n")
    return EXIT_UNKNOWN


def cmd_coherence(args, out) -> int:
    try:
        x, y = parse_word(args.word1), parse_word(args.word2)
    except (PathError, ValueError) as exc:
        raise InputError(f"cannot read word: {exc}") from None
    try:
        perm = match_leaves(x, y)
    except PathError as exc:
        out.write(f"no canonical arrow {x!r} -> {y!r}: {exc}\n")
        return EXIT_FAIL
    p = canonical_path(x, y, perm)
    out.write(f"{x!r} -> {y!r}\n")
    out.write(f"permutation: {' '.join(map(str, perm))}\n")
    out.write(f"{len(p.edges)} edges: {p!r}\n")
    return EXIT_OK


def cmd_suite(args, out) -> int:
    from .suite import run_suite
    return run_suite(args.selector, out)


def cmd_emit(args, out) -> int:
    if args.name not in corpus.CORPUS:
        raise InputError(f"unknown corpus member {args.name!r}; choose from {', '.join(corpus.CORPUS)}")
    out.write(emit_presentation(corpus.CORPUS[args.name]()))
    return EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="smctensor", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="parse a presentation and validate the SMC axioms")
    p.add_argument("file")
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("hom", help="enumerate the internal hom [A, B]")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(run=cmd_hom)

    p = sub.add_parser("tensor-eq", help="decide equality of two paths in A (x) B")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("path1")
    p.add_argument("path2")
    p.add_argument("--budget", type=int, default=32, help="search expansions per link (default 32)")
    p.add_argument("--into", metavar="FILE_C", help="target C for the extensions En(F), F: A -> [B, C]")
    p.add_argument("--extensions", default="",
                   help="comma-separated indices into the enumeration of A -> [B, C], 'all' or 'none'")
    p.add_argument("--via", action="append", metavar="PATH", help="waypoint path; may be repeated")
    p.add_argument("--normalize", action="store_true", help="retry on normal forms when the raw search fails")
    p.set_defaults(run=cmd_tensor_eq)

    p = sub.add_parser("coherence", help="print the canonical arrow between two words")
    p.add_argument("word1")
    p.add_argument("word2")
    p.set_defaults(run=cmd_coherence)

    p = sub.add_parser("suite", help="run acceptance checks: a section name or 'all'")
    p.add_argument("selector")
    p.set_defaults(run=cmd_suite)

    p = sub.add_parser("emit", help="print a corpus SMC as a presentation file")
    p.add_argument("name")
    p.set_defaults(run=cmd_emit)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if getattr(args, "budget", 0) < 0:
        out.write("error: --budget must be non-negative\n")
        return EXIT_USAGE
    try:
        return args.run(args, out)
    except (InputError, CategoryError) as exc:
        out.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
