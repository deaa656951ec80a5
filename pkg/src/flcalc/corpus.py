"""The regression corpus: one proof file per figure, plus expectations.

Layout of a corpus directory::

    manifest        one entry per line: id, system, expected verdict,
                    figure reference (tab separated; '#' comments allowed)
    errata          optional; lines of id<TAB>note documenting corrections
                    applied to the printed figure
    <id>.proof      the proof script

``run_corpus`` checks every entry under its declared system and re-derives
the associativity/distributivity derivability matrix with the cut-free
decision procedure.
"""

from __future__ import annotations

import importlib.resources
import time
from dataclasses import dataclass, field
from pathlib import Path

from .calculus import ProofTree, System, check_proof
from .search import Provable, decide_cut_free
from .syntax import SourceError, parse_proof, parse_sequent


class CorpusError(Exception):
    pass


@dataclass(frozen=True)
class CorpusEntry:
    entry_id: str
    system: System
    path: Path
    expected: str  # "accepted" | "rejected"
    figure: str
    errata: tuple[str, ...]
    proof: ProofTree


# Derivability expectations re-derived on every corpus run: sequent text,
# system, expected cut-free decision.
DERIVABILITY_MATRIX: tuple[tuple[str, System, bool], ...] = (
    ("A * B * C |- (A * B) * C", System.FL, True),
    ("A * B * C |- (A * B) * C", System.FLP, False),
    ("(A * B) * C |- A * B * C", System.FL, True),
    ("(A * B) * C |- A * B * C", System.FLP, True),
    ("A * (B \\/ C) |- A * B \\/ A * C", System.FL, True),
    ("A * (B \\/ C) |- A * B \\/ A * C", System.FLP, False),
    ("A * B \\/ A * C |- A * (B \\/ C)", System.FL, True),
    ("A * B \\/ A * C |- A * (B \\/ C)", System.FLP, True),
)


def default_corpus_dir() -> Path:
    return Path(str(importlib.resources.files("flcalc") / "corpus_data"))


def load_corpus(directory: str | Path | None = None) -> list[CorpusEntry]:
    root = Path(directory) if directory is not None else default_corpus_dir()
    manifest = root / "manifest"
    if not manifest.is_file():
        raise CorpusError(f"no entries found: missing manifest in {root}")

    errata: dict[str, list[str]] = {}
    errata_path = root / "errata"
    if errata_path.is_file():
        for raw in errata_path.read_text(encoding="utf-8").splitlines():
            if not raw.strip() or raw.startswith("#"):
                continue
            entry_id, _, note = raw.partition("\t")
            errata.setdefault(entry_id.strip(), []).append(note.strip())

    entries: list[CorpusEntry] = []
    for lineno, raw in enumerate(
            manifest.read_text(encoding="utf-8").splitlines(), start=1):
        if not raw.strip() or raw.startswith("#"):
            continue
        fields = raw.split("\t")
        if len(fields) != 4:
            raise CorpusError(
                f"manifest line {lineno}: expected 4 tab-separated fields")
        entry_id, sys_token, expected, figure = (f.strip() for f in fields)
        try:
            system = System.parse(sys_token)
        except ValueError as exc:
            raise CorpusError(f"entry {entry_id}: {exc}") from None
        if expected not in ("accepted", "rejected"):
            raise CorpusError(
                f"entry {entry_id}: bad expected verdict {expected!r}")
        path = root / f"{entry_id}.proof"
        if not path.is_file():
            raise CorpusError(f"entry {entry_id}: missing proof file {path}")
        try:
            proof = parse_proof(path.read_text(encoding="utf-8"))
        except SourceError as exc:
            raise CorpusError(f"entry {entry_id}: corrupt proof file: {exc}")
        entries.append(CorpusEntry(entry_id, system, path, expected, figure,
                                   tuple(errata.get(entry_id, ())), proof))
    if not entries:
        raise CorpusError(f"no entries found in {manifest}")
    return entries


@dataclass
class CorpusReport:
    entries: list[tuple[str, bool, str]] = field(default_factory=list)
    matrix: list[tuple[str, System, bool, bool]] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return (all(ok for _, ok, _ in self.entries)
                and all(ok for _, _, _, ok in self.matrix))


def run_corpus(directory: str | Path | None = None) -> CorpusReport:
    started = time.monotonic()
    report = CorpusReport()
    for entry in load_corpus(directory):
        result = check_proof(entry.system, entry.proof)
        verdict = "accepted" if result.accepted else "rejected"
        ok = verdict == entry.expected
        detail = f"{verdict} under {entry.system.value}"
        if not result.accepted:
            detail += f" ({result.reason} at {result.path})"
        report.entries.append((entry.entry_id, ok, detail))
    for text, system, expected in DERIVABILITY_MATRIX:
        outcome = decide_cut_free(system, parse_sequent(text))
        provable = isinstance(outcome, Provable)
        report.matrix.append((text, system, expected, provable == expected))
    report.elapsed = time.monotonic() - started
    return report
