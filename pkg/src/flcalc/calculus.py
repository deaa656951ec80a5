"""Rule tables, backward rule instantiation, and proof checking.

Two systems share one rule-name vocabulary:

* ``System.FL`` -- the contexted formulation.  Left rules carry context
  parameters on both sides of the principal formula, and the two
  implication-left rules reorder contexts in the conclusion.
* ``System.FLP`` -- the restricted formulation.  The left rules ``botL``,
  ``oneW``, ``tensL``, ``andL1``, ``andL2``, and ``orL`` admit their
  principal formula only leftmost, and each implication-left keeps its
  argument context on one fixed side.

Rule shapes (premises / conclusion; Greek letters are contexts, ``C`` an
optional succedent):

===========  ==========================================  ==========================================
name         FLP                                         FL
===========  ==========================================  ==========================================
id           A |- A                                      same
oneR         |- 1                                        same
zeroL        0 |-                                        same
topR         G |- top                                    same
botL         bot, G |- C                                 G1, bot, G2 |- C
oneW         G |- C  /  1, G |- C                        G1, G2 |- C  /  G1, 1, G2 |- C
zeroW        G |-  /  G |- 0                             same
cut          G1 |- A ; G2, A, G3 |- C  /  G2, G1, G3 |- C   same
impL         G1 |- A ; B, G2 |- C  /  G1, A->B, G2 |- C  G1 |- A ; G2, B, G3 |- C  /  G2, A->B, G1, G3 |- C
impR         A, G |- B  /  G |- A->B                     G, A |- B  /  G |- A->B
coimpL       G1 |- A ; B, G2 |- C  /  A<-B, G1, G2 |- C  G1 |- A ; G2, B, G3 |- C  /  G2, G1, A<-B, G3 |- C
coimpR       G, A |- B  /  G |- A<-B                     A, G |- B  /  G |- A<-B
negL         G |- A  /  G, neg A |-                      G |- A  /  neg A, G |-
negR         A, G |-  /  G |- neg A                      G, A |-  /  G |- neg A
conegL       G |- A  /  coneg A, G |-                    G |- A  /  G, coneg A |-
conegR       G, A |-  /  G |- coneg A                    A, G |-  /  G |- coneg A
tensL        A, B, G |- C  /  A*B, G |- C                G1, A, B, G2 |- C  /  G1, A*B, G2 |- C
tensR        G1 |- A ; G2 |- B  /  G1, G2 |- A*B         same
andL1        A, G |- C  /  A/\\B, G |- C                  G1, A, G2 |- C  /  G1, A/\\B, G2 |- C
andL2        B, G |- C  /  A/\\B, G |- C                  G1, B, G2 |- C  /  G1, A/\\B, G2 |- C
andR         G |- A ; G |- B  /  G |- A/\\B               same
orL          A, G |- C ; B, G |- C  /  A\\/B, G |- C      G1, A, G2 |- C ; G1, B, G2 |- C  /  G1, A\\/B, G2 |- C
orR1         G |- A  /  G |- A\\/B                        same
orR2         G |- B  /  G |- A\\/B                        same
===========  ==========================================  ==========================================

The succedent metavariable ``C`` in left rules and cut ranges over "empty
or one formula".  Proof scripts carry rule names only; a node checks if
any instantiation of its named schema matches its conclusion together
with its premises' conclusions.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Iterator

from .formulas import (
    BOT,
    CoImp,
    CoNeg,
    Formula,
    Imp,
    Neg,
    ONE,
    Plus,
    Sequent,
    Tensor,
    TOP,
    With,
    ZERO,
)


class System(enum.Enum):
    FL = "fl"
    FLP = "flp"

    @staticmethod
    def parse(token: str) -> "System":
        for sys in System:
            if sys.value == token:
                return sys
        raise ValueError(f"unknown system {token!r} (expected 'fl' or 'flp')")


@dataclass(frozen=True)
class ProofTree:
    rule: str
    conclusion: Sequent
    premises: tuple["ProofTree", ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.premises, tuple):
            object.__setattr__(self, "premises", tuple(self.premises))


@dataclass(frozen=True)
class CheckReport:
    accepted: bool
    path: tuple[int, ...] | None = None
    node: Sequent | None = None
    reason: str | None = None


@dataclass(frozen=True)
class RuleSchema:
    name: str
    system: System
    arity: int
    candidates: Callable[[Sequent], tuple[tuple[Sequent, ...], ...]]


RULE_NAMES: tuple[str, ...] = (
    "id", "oneR", "zeroL", "topR", "botL",
    "oneW", "zeroW", "cut",
    "impL", "impR", "coimpL", "coimpR",
    "negL", "negR", "conegL", "conegR",
    "tensL", "tensR", "andL1", "andL2", "andR",
    "orL", "orR1", "orR2",
)

ARITY: dict[str, int] = {
    "id": 0, "oneR": 0, "zeroL": 0, "topR": 0, "botL": 0,
    "oneW": 1, "zeroW": 1, "cut": 2,
    "impL": 2, "impR": 1, "coimpL": 2, "coimpR": 1,
    "negL": 1, "negR": 1, "conegL": 1, "conegR": 1,
    "tensL": 1, "tensR": 2, "andL1": 1, "andL2": 1, "andR": 2,
    "orL": 2, "orR1": 1, "orR2": 1,
}


def _gen_id(sys: System, s: Sequent) -> Iterator[tuple[Sequent, ...]]:
    if s.succedent is not None and s.antecedent == (s.succedent,):
        yield ()


def _gen_oneR(sys: System, s: Sequent) -> Iterator[tuple[Sequent, ...]]:
    if s.antecedent == () and s.succedent == ONE:
        yield ()


def _gen_zeroL(sys: System, s: Sequent) -> Iterator[tuple[Sequent, ...]]:
    if s.antecedent == (ZERO,) and s.succedent is None:
        yield ()


def _gen_topR(sys: System, s: Sequent) -> Iterator[tuple[Sequent, ...]]:
    if s.succedent == TOP:
        yield ()


def _gen_botL(sys: System, s: Sequent) -> Iterator[tuple[Sequent, ...]]:
    ant = s.antecedent
    if sys is System.FLP:
        if ant and ant[0] == BOT:
            yield ()
    elif BOT in ant:
        yield ()


def _gen_oneW(sys: System, s: Sequent) -> Iterator[tuple[Sequent, ...]]:
    ant = s.antecedent
    if sys is System.FLP:
        if ant and ant[0] == ONE:
            yield (Sequent(ant[1:], s.succedent),)
        return
    for i, f in enumerate(ant):
        if f == ONE:
            yield (Sequent(ant[:i] + ant[i + 1:], s.succedent),)


def _gen_zeroW(sys: System, s: Sequent) -> Iterator[tuple[Sequent, ...]]:
    if s.succedent == ZERO:
        yield (Sequent(s.antecedent, None),)


def _gen_impL(sys: System, s: Sequent) -> Iterator[tuple[Sequent, ...]]:
    ant = s.antecedent
    for i, f in enumerate(ant):
        if not isinstance(f, Imp):
            continue
        if sys is System.FLP:
            yield (Sequent(ant[:i], f.left),
                   Sequent((f.right,) + ant[i + 1:], s.succedent))
        else:
            rest = ant[i + 1:]
            for j in range(len(rest) + 1):
                yield (Sequent(rest[:j], f.left),
                       Sequent(ant[:i] + (f.right,) + rest[j:], s.succedent))


def _gen_coimpL(sys: System, s: Sequent) -> Iterator[tuple[Sequent, ...]]:
    ant = s.antecedent
    if sys is System.FLP:
        if ant and isinstance(ant[0], CoImp):
            f = ant[0]
            rest = ant[1:]
            for j in range(len(rest) + 1):
                yield (Sequent(rest[:j], f.left),
                       Sequent((f.right,) + rest[j:], s.succedent))
        return
    for i, f in enumerate(ant):
        if not isinstance(f, CoImp):
            continue
        for j in range(i + 1):
            yield (Sequent(ant[j:i], f.left),
                   Sequent(ant[:j] + (f.right,) + ant[i + 1:], s.succedent))


def _gen_impR(sys: System, s: Sequent) -> Iterator[tuple[Sequent, ...]]:
    f = s.succedent
    if isinstance(f, Imp):
        if sys is System.FLP:
            yield (Sequent((f.left,) + s.antecedent, f.right),)
        else:
            yield (Sequent(s.antecedent + (f.left,), f.right),)


def _gen_coimpR(sys: System, s: Sequent) -> Iterator[tuple[Sequent, ...]]:
    f = s.succedent
    if isinstance(f, CoImp):
        if sys is System.FLP:
            yield (Sequent(s.antecedent + (f.left,), f.right),)
        else:
            yield (Sequent((f.left,) + s.antecedent, f.right),)


def _gen_negL(sys: System, s: Sequent) -> Iterator[tuple[Sequent, ...]]:
    ant = s.antecedent
    if s.succedent is not None or not ant:
        return
    if sys is System.FLP:
        if isinstance(ant[-1], Neg):
            yield (Sequent(ant[:-1], ant[-1].body),)
    elif isinstance(ant[0], Neg):
        yield (Sequent(ant[1:], ant[0].body),)


def _gen_negR(sys: System, s: Sequent) -> Iterator[tuple[Sequent, ...]]:
    f = s.succedent
    if isinstance(f, Neg):
        if sys is System.FLP:
            yield (Sequent((f.body,) + s.antecedent, None),)
        else:
            yield (Sequent(s.antecedent + (f.body,), None),)


def _gen_conegL(sys: System, s: Sequent) -> Iterator[tuple[Sequent, ...]]:
    ant = s.antecedent
    if s.succedent is not None or not ant:
        return
    if sys is System.FLP:
        if isinstance(ant[0], CoNeg):
            yield (Sequent(ant[1:], ant[0].body),)
    elif isinstance(ant[-1], CoNeg):
        yield (Sequent(ant[:-1], ant[-1].body),)


def _gen_conegR(sys: System, s: Sequent) -> Iterator[tuple[Sequent, ...]]:
    f = s.succedent
    if isinstance(f, CoNeg):
        if sys is System.FLP:
            yield (Sequent(s.antecedent + (f.body,), None),)
        else:
            yield (Sequent((f.body,) + s.antecedent, None),)


def _gen_tensL(sys: System, s: Sequent) -> Iterator[tuple[Sequent, ...]]:
    ant = s.antecedent
    if sys is System.FLP:
        if ant and isinstance(ant[0], Tensor):
            f = ant[0]
            yield (Sequent((f.left, f.right) + ant[1:], s.succedent),)
        return
    for i, f in enumerate(ant):
        if isinstance(f, Tensor):
            yield (Sequent(ant[:i] + (f.left, f.right) + ant[i + 1:], s.succedent),)


def _gen_tensR(sys: System, s: Sequent) -> Iterator[tuple[Sequent, ...]]:
    f = s.succedent
    if isinstance(f, Tensor):
        ant = s.antecedent
        for k in range(len(ant) + 1):
            yield (Sequent(ant[:k], f.left), Sequent(ant[k:], f.right))


def _make_andL(pick_left: bool):
    def gen(sys: System, s: Sequent) -> Iterator[tuple[Sequent, ...]]:
        ant = s.antecedent
        if sys is System.FLP:
            if ant and isinstance(ant[0], With):
                active = ant[0].left if pick_left else ant[0].right
                yield (Sequent((active,) + ant[1:], s.succedent),)
            return
        for i, f in enumerate(ant):
            if isinstance(f, With):
                active = f.left if pick_left else f.right
                yield (Sequent(ant[:i] + (active,) + ant[i + 1:], s.succedent),)
    return gen


def _gen_andR(sys: System, s: Sequent) -> Iterator[tuple[Sequent, ...]]:
    f = s.succedent
    if isinstance(f, With):
        yield (Sequent(s.antecedent, f.left), Sequent(s.antecedent, f.right))


def _gen_orL(sys: System, s: Sequent) -> Iterator[tuple[Sequent, ...]]:
    ant = s.antecedent
    if sys is System.FLP:
        if ant and isinstance(ant[0], Plus):
            f = ant[0]
            yield (Sequent((f.left,) + ant[1:], s.succedent),
                   Sequent((f.right,) + ant[1:], s.succedent))
        return
    for i, f in enumerate(ant):
        if isinstance(f, Plus):
            yield (Sequent(ant[:i] + (f.left,) + ant[i + 1:], s.succedent),
                   Sequent(ant[:i] + (f.right,) + ant[i + 1:], s.succedent))


def _make_orR(pick_left: bool):
    def gen(sys: System, s: Sequent) -> Iterator[tuple[Sequent, ...]]:
        f = s.succedent
        if isinstance(f, Plus):
            yield (Sequent(s.antecedent, f.left if pick_left else f.right),)
    return gen


def _gen_cut(sys: System, s: Sequent) -> Iterator[tuple[Sequent, ...]]:
    # Backward cut is only enumerable against an explicit cut formula; the
    # checker and the with-cut search handle it themselves.
    return iter(())


_GENERATORS = {
    "id": _gen_id, "oneR": _gen_oneR, "zeroL": _gen_zeroL, "topR": _gen_topR,
    "botL": _gen_botL, "oneW": _gen_oneW, "zeroW": _gen_zeroW, "cut": _gen_cut,
    "impL": _gen_impL, "impR": _gen_impR, "coimpL": _gen_coimpL,
    "coimpR": _gen_coimpR, "negL": _gen_negL, "negR": _gen_negR,
    "conegL": _gen_conegL, "conegR": _gen_conegR, "tensL": _gen_tensL,
    "tensR": _gen_tensR, "andL1": _make_andL(True), "andL2": _make_andL(False),
    "andR": _gen_andR, "orL": _gen_orL, "orR1": _make_orR(True),
    "orR2": _make_orR(False),
}


def premise_candidates(sys: System, rule: str,
                       conclusion: Sequent) -> tuple[tuple[Sequent, ...], ...]:
    """All premise lists instantiating ``rule`` backward from ``conclusion``.

    The order is fixed: principal position left to right, then context
    split point ascending.  ``cut`` yields no candidates by contract.
    """
    try:
        gen = _GENERATORS[rule]
    except KeyError:
        raise ValueError(f"unknown rule name {rule!r}") from None
    return tuple(gen(sys, conclusion))


def rule_schemas(sys: System) -> list[RuleSchema]:
    """The complete rule table of ``sys``, in a fixed stable order."""

    def bind(name: str) -> Callable[[Sequent], tuple[tuple[Sequent, ...], ...]]:
        return lambda conclusion: premise_candidates(sys, name, conclusion)

    return [RuleSchema(name, sys, ARITY[name], bind(name)) for name in RULE_NAMES]


def _cut_instantiates(conclusion: Sequent, premises: tuple[Sequent, ...]) -> bool:
    if len(premises) != 2:
        return False
    p1, p2 = premises
    cut_formula = p1.succedent
    if cut_formula is None or p2.succedent != conclusion.succedent:
        return False
    g1 = p1.antecedent
    ant = conclusion.antecedent
    n, m = len(ant), len(g1)
    for k in range(n - m + 1):
        if ant[k:k + m] != g1:
            continue
        if p2.antecedent == ant[:k] + (cut_formula,) + ant[k + m:]:
            return True
    return False


def instantiates(sys: System, rule: str, conclusion: Sequent,
                 premises: tuple[Sequent, ...]) -> bool:
    """Whether (premises / conclusion) is an instance of the named schema."""
    if rule == "cut":
        return _cut_instantiates(conclusion, premises)
    return premises in premise_candidates(sys, rule, conclusion)


def check_proof(sys: System, tree: ProofTree) -> CheckReport:
    """Validate every node of ``tree`` against its named schema of ``sys``.

    Nodes are visited root first, premises left to right; the report names
    the first offending node by its premise-index path.
    """

    def visit(node: ProofTree, path: tuple[int, ...]) -> CheckReport | None:
        if node.rule not in ARITY:
            return CheckReport(False, path, node.conclusion,
                               f"unknown rule {node.rule!r}")
        expected = ARITY[node.rule]
        if len(node.premises) != expected:
            return CheckReport(
                False, path, node.conclusion,
                f"rule {node.rule} expects {expected} premises, "
                f"found {len(node.premises)}")
        premise_seqs = tuple(p.conclusion for p in node.premises)
        if not instantiates(sys, node.rule, node.conclusion, premise_seqs):
            return CheckReport(
                False, path, node.conclusion,
                f"no {sys.value} instantiation of {node.rule} matches")
        for i, child in enumerate(node.premises):
            bad = visit(child, path + (i,))
            if bad is not None:
                return bad
        return None

    bad = visit(tree, ())
    return bad if bad is not None else CheckReport(True)
