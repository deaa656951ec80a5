"""Formulas, sequents, and the symbol-correspondence map.

The language is propositional with two implications (``->`` and ``<-``),
two negations (``neg`` and ``coneg``), a multiplicative conjunction ``*``,
an additive conjunction ``/\\``, an additive disjunction ``\\/``, and four
constants: ``1`` (unit of ``*``), ``0``, ``top`` (unit of ``/\\``), and
``bot`` (unit of ``\\/``).  There is no exchange rule anywhere downstream,
so formula equality is strictly syntactic and antecedent order in a
sequent is significant.
"""

from __future__ import annotations

from dataclasses import dataclass


class Formula:
    """Base class for formula nodes.  All subclasses are frozen dataclasses."""

    __slots__ = ()


@dataclass(frozen=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True)
class Const(Formula):
    kind: str  # "one" | "zero" | "top" | "bot"


ONE = Const("one")
ZERO = Const("zero")
TOP = Const("top")
BOT = Const("bot")


@dataclass(frozen=True)
class Neg(Formula):
    body: Formula


@dataclass(frozen=True)
class CoNeg(Formula):
    body: Formula


@dataclass(frozen=True)
class Imp(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class CoImp(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Tensor(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class With(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Plus(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Sequent:
    """An ordered antecedent and an optional succedent formula.

    Both sides may be empty; the succedent never holds more than one
    formula.
    """

    antecedent: tuple[Formula, ...]
    succedent: Formula | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.antecedent, tuple):
            object.__setattr__(self, "antecedent", tuple(self.antecedent))


def size(x: Formula | Sequent) -> int:
    """Number of constructor nodes; for a sequent, the sum over all its
    formulas plus one."""
    if isinstance(x, Sequent):
        total = 1 + sum(size(f) for f in x.antecedent)
        if x.succedent is not None:
            total += size(x.succedent)
        return total
    if isinstance(x, (Atom, Const)):
        return 1
    if isinstance(x, (Neg, CoNeg)):
        return 1 + size(x.body)
    return 1 + size(x.left) + size(x.right)


def subformula_closure(x: Formula | Sequent) -> frozenset[Formula]:
    """All subformulas of ``x``, including the formulas of ``x`` themselves."""
    acc: set[Formula] = set()

    def walk(f: Formula) -> None:
        if f in acc:
            return
        acc.add(f)
        if isinstance(f, (Neg, CoNeg)):
            walk(f.body)
        elif isinstance(f, (Imp, CoImp, Tensor, With, Plus)):
            walk(f.left)
            walk(f.right)

    if isinstance(x, Sequent):
        for f in x.antecedent:
            walk(f)
        if x.succedent is not None:
            walk(x.succedent)
    else:
        walk(x)
    return frozenset(acc)


@dataclass(frozen=True)
class SymbolMap:
    """A self-inverse renaming of connectives, applied homomorphically.

    The canonical instance ``SIGMA`` swaps the two implications and the two
    negations and fixes everything else; ``IDENTITY`` fixes everything.
    """

    swap_implications: bool = False
    swap_negations: bool = False


SIGMA = SymbolMap(swap_implications=True, swap_negations=True)
IDENTITY = SymbolMap()


def apply_symbol_map(m: SymbolMap, x):
    """Apply ``m`` to a formula, pointwise to a sequent, or to every sequent
    of a proof tree (rule labels are left untouched)."""
    if isinstance(x, Formula):
        return _map_formula(m, x)
    if isinstance(x, Sequent):
        succ = None if x.succedent is None else _map_formula(m, x.succedent)
        return Sequent(tuple(_map_formula(m, f) for f in x.antecedent), succ)
    # Proof-tree-like: anything carrying (rule, conclusion, premises).
    return type(x)(
        x.rule,
        apply_symbol_map(m, x.conclusion),
        tuple(apply_symbol_map(m, p) for p in x.premises),
    )


def _map_formula(m: SymbolMap, f: Formula) -> Formula:
    if isinstance(f, (Atom, Const)):
        return f
    if isinstance(f, Neg):
        body = _map_formula(m, f.body)
        return CoNeg(body) if m.swap_negations else Neg(body)
    if isinstance(f, CoNeg):
        body = _map_formula(m, f.body)
        return Neg(body) if m.swap_negations else CoNeg(body)
    if isinstance(f, Imp):
        left, right = _map_formula(m, f.left), _map_formula(m, f.right)
        return CoImp(left, right) if m.swap_implications else Imp(left, right)
    if isinstance(f, CoImp):
        left, right = _map_formula(m, f.left), _map_formula(m, f.right)
        return Imp(left, right) if m.swap_implications else CoImp(left, right)
    ctor = type(f)
    return ctor(_map_formula(m, f.left), _map_formula(m, f.right))
