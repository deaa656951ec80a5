"""Command-line interface.

Subcommands::

    check --system fl|flp FILE
    search --system fl|flp "SEQUENT" [--cut-pool FILE --depth N]
           [--emit FILE] [--latex FILE]
    translate --to flp|fl FILE [--strategy tensor|curried] [--literal]
              [--emit FILE] [--latex FILE]
    embed FILE [--emit FILE] [--latex FILE]
    corpus run [--dir PATH]

Exit codes: 0 valid/provable, 1 invalid/unprovable, 2 usage or parse
error, 3 resource exceeded.

Proof files use the indented text format by default; a ``.json`` suffix
selects the machine format for both reading and ``--emit``.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .calculus import ProofTree, System, check_proof
from .corpus import CorpusError, run_corpus
from .formulas import Formula
from .search import (
    CutBudget,
    Provable,
    ResourceExceeded,
    decide_cut_free,
    search_with_cuts,
)
from .syntax import (
    SourceError,
    emit_latex,
    parse_formula,
    parse_proof,
    parse_sequent,
    print_proof,
    proof_from_json,
    proof_to_json,
)
from .translate import embed_to_fl, translate_to_fl_prime


def _read_proof(path: str) -> ProofTree:
    text = Path(path).read_text(encoding="utf-8")
    if path.endswith(".json"):
        return proof_from_json(text)
    return parse_proof(text)


def _write_proof(path: str, tree: ProofTree) -> None:
    text = proof_to_json(tree) if path.endswith(".json") else print_proof(tree)
    Path(path).write_text(text, encoding="utf-8")


def _read_pool(path: str) -> list[Formula]:
    pool = []
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            pool.append(parse_formula(line))
    return pool


def _emit_outputs(args, tree: ProofTree) -> None:
    if getattr(args, "emit", None):
        _write_proof(args.emit, tree)
    if getattr(args, "latex", None):
        Path(args.latex).write_text(emit_latex(tree), encoding="utf-8")


def _cmd_check(args) -> int:
    system = System.parse(args.system)
    tree = _read_proof(args.file)
    report = check_proof(system, tree)
    if report.accepted:
        print(f"accepted under {system.value}")
        return 0
    print(f"rejected under {system.value}: {report.reason} "
          f"at path {list(report.path)}")
    return 1


def _cmd_search(args) -> int:
    system = System.parse(args.system)
    goal = parse_sequent(args.sequent)
    if args.cut_pool or args.depth is not None:
        pool = _read_pool(args.cut_pool) if args.cut_pool else []
        depth = args.depth if args.depth is not None else 12
        outcome = search_with_cuts(system, goal, CutBudget(tuple(pool), depth))
    else:
        outcome = decide_cut_free(system, goal)
    if isinstance(outcome, Provable):
        print(f"provable under {system.value}")
        sys.stdout.write(print_proof(outcome.witness))
        _emit_outputs(args, outcome.witness)
        return 0
    if isinstance(outcome, ResourceExceeded):
        print(f"resource exceeded: {outcome.limit}")
        return 3
    print(f"unprovable under {system.value}")
    return 1


def _cmd_translate(args) -> int:
    target = System.parse(args.to)
    tree = _read_proof(args.file)
    if args.literal:
        # Probe the naive reading: keep rule names and formulas verbatim
        # and check the same tree under the target system.
        report = check_proof(target, tree)
        if report.accepted:
            print(f"literal reading checks under {target.value}")
            _emit_outputs(args, tree)
            return 0
        print(f"literal reading fails under {target.value}: "
              f"{report.reason} at path {list(report.path)}")
        return 1
    try:
        if target is System.FLP:
            trace = translate_to_fl_prime(tree, strategy=args.strategy)
            out = trace.output
            print(f"translated to flp with {trace.cuts_introduced} cuts "
                  f"introduced ({args.strategy} strategy)")
        else:
            out = embed_to_fl(tree)
            print("embedded into fl")
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(print_proof(out))
    _emit_outputs(args, out)
    return 0


def _cmd_embed(args) -> int:
    tree = _read_proof(args.file)
    try:
        out = embed_to_fl(tree)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print("embedded into fl")
    sys.stdout.write(print_proof(out))
    _emit_outputs(args, out)
    return 0


def _cmd_corpus(args) -> int:
    if args.action != "run":
        print(f"error: unknown corpus action {args.action!r}", file=sys.stderr)
        return 2
    report = run_corpus(args.dir)
    for entry_id, ok, detail in report.entries:
        print(f"{'ok  ' if ok else 'FAIL'} {entry_id}: {detail}")
    for text, system, expected, ok in report.matrix:
        want = "provable" if expected else "unprovable"
        print(f"{'ok  ' if ok else 'FAIL'} matrix {system.value} "
              f"[{text}] expected {want}")
    print(f"corpus run finished in {report.elapsed:.2f}s: "
          f"{'all expectations met' if report.ok else 'FAILURES'}")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flcalc",
        description="Proof checking, search, and translation for two "
                    "formulations of the Full Lambek sequent calculus.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="validate a proof script")
    p_check.add_argument("--system", required=True, choices=["fl", "flp"])
    p_check.add_argument("file")
    p_check.set_defaults(func=_cmd_check)

    p_search = sub.add_parser("search", help="decide derivability")
    p_search.add_argument("--system", required=True, choices=["fl", "flp"])
    p_search.add_argument("sequent")
    p_search.add_argument("--cut-pool", metavar="FILE",
                          help="file of cut formulas, one per line")
    p_search.add_argument("--depth", type=int,
                          help="proof height bound for the with-cut mode")
    p_search.add_argument("--emit", metavar="FILE",
                          help="write the witness proof")
    p_search.add_argument("--latex", metavar="FILE",
                          help="write the witness as a LaTeX figure")
    p_search.set_defaults(func=_cmd_search)

    p_translate = sub.add_parser("translate",
                                 help="translate a proof between systems")
    p_translate.add_argument("--to", required=True, choices=["flp", "fl"])
    p_translate.add_argument("file")
    p_translate.add_argument("--strategy", default="tensor",
                             choices=["tensor", "curried"])
    p_translate.add_argument("--literal", action="store_true",
                             help="probe the naive reading: no symbol swap, "
                                  "just re-check the tree under the target")
    p_translate.add_argument("--emit", metavar="FILE")
    p_translate.add_argument("--latex", metavar="FILE")
    p_translate.set_defaults(func=_cmd_translate)

    p_embed = sub.add_parser("embed", help="embed an flp proof into fl")
    p_embed.add_argument("file")
    p_embed.add_argument("--emit", metavar="FILE")
    p_embed.add_argument("--latex", metavar="FILE")
    p_embed.set_defaults(func=_cmd_embed)

    p_corpus = sub.add_parser("corpus", help="corpus operations")
    p_corpus.add_argument("action", choices=["run"])
    p_corpus.add_argument("--dir", help="corpus directory override")
    p_corpus.set_defaults(func=_cmd_corpus)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SourceError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except CorpusError as exc:
        print(f"corpus error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
